/** Thin client for the layout service. All computation happens server-side;
 * the viewer never re-derives crossings or splits from the graph. */

import type { LayoutDocumentJson, RunConfigJson } from "./types.js";

export class ServiceError extends Error {
  readonly status: number;

  constructor(message: string, status: number) {
    super(message);
    this.name = "ServiceError";
    this.status = status;
  }
}

async function postJson(path: string, body: unknown): Promise<LayoutDocumentJson> {
  const response = await fetch(path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  const text = await response.text();
  if (!response.ok) {
    let message = `service error (status ${response.status})`;
    try {
      const parsed = JSON.parse(text) as { error?: string };
      if (parsed.error) message = parsed.error;
    } catch {
      // non-JSON error body: keep the generic message
    }
    throw new ServiceError(message, response.status);
  }
  return JSON.parse(text) as LayoutDocumentJson;
}

export function requestLayout(
  dataset: unknown,
  config: RunConfigJson,
): Promise<LayoutDocumentJson> {
  return postJson("/api/layout", { dataset, config });
}

export function requestSplit(
  document: LayoutDocumentJson,
  config: RunConfigJson,
): Promise<LayoutDocumentJson> {
  return postJson("/api/split", { document, config });
}
