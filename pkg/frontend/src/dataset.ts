/** Local dataset parsing, used only to show side counts before drawing.
 * The service remains the authority on what actually loads. */

export interface DatasetStats {
  topCount: number;
  bottomCount: number;
  edgeCount: number;
}

export interface ParsedDataset {
  data: unknown;
  stats: DatasetStats;
}

function isRecordArray(value: unknown): value is Record<string, unknown>[] {
  return Array.isArray(value);
}

function nodeLinkStats(obj: Record<string, unknown>): DatasetStats | null {
  const nodes = obj.nodes;
  const links = obj.links ?? obj.edges;
  if (!isRecordArray(nodes) || !Array.isArray(links)) return null;
  const groupOf = (node: Record<string, unknown>): unknown =>
    node.layer ?? node.group ?? node.type;
  const values = [...new Set(nodes.map(groupOf))].filter(
    (v): v is string | number => v !== undefined,
  );
  if (values.length !== 2) return null;
  // Mirror the service: "top"/"bottom" are taken literally, otherwise the
  // smaller of the two values names the top layer.
  const [a, b] = [...values].sort();
  const topValue = values.includes("top") && values.includes("bottom") ? "top" : a;
  void b;
  const topCount = nodes.filter((n) => groupOf(n) === topValue).length;
  return {
    topCount,
    bottomCount: nodes.length - topCount,
    edgeCount: links.length,
  };
}

export function parseDataset(text: string): ParsedDataset {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (exc) {
    throw new Error(`not valid JSON: ${(exc as Error).message}`);
  }
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new Error("dataset must be a JSON object");
  }
  const obj = data as Record<string, unknown>;
  if (
    Array.isArray(obj.top) &&
    Array.isArray(obj.bottom) &&
    Array.isArray(obj.edges)
  ) {
    return {
      data,
      stats: {
        topCount: obj.top.length,
        bottomCount: obj.bottom.length,
        edgeCount: obj.edges.length,
      },
    };
  }
  const stats = nodeLinkStats(obj);
  if (stats) return { data, stats };
  throw new Error(
    "dataset needs top/bottom/edges arrays or node-link nodes/links",
  );
}
