/** Viewer controller: a dataset text area, layout controls, Draw / Split
 * buttons, and the rendered drawing.
 *
 * State rules:
 *  - Draw is enabled once the text area holds a parseable dataset.
 *  - Split is enabled only after a successful Draw.
 *  - At most one request is in flight; every control is disabled meanwhile.
 *  - A failed request shows a toast and keeps the previous layout.
 *  - The crossing badge always repeats the document's `crossings` field;
 *    nothing is recomputed client-side.
 */

import { requestLayout, requestSplit } from "./api.js";
import { parseDataset, type DatasetStats } from "./dataset.js";
import { renderLayout, vertexIndex, type VertexInfo } from "./layout.js";
import type { LayoutDocumentJson, RunConfigJson } from "./types.js";

export interface ViewState {
  dataset: unknown | null;
  stats: DatasetStats | null;
  document: LayoutDocumentJson | null;
  selection: string | null;
  pending: boolean;
}

const SHELL = `
  <div class="controls">
    <textarea id="dataset-input" rows="6"
      placeholder="Paste a dataset as JSON"></textarea>
    <div id="dataset-stats" class="stats"></div>
    <div id="dataset-error" class="inline-error" hidden></div>
    <div class="row">
      <label>fixed side
        <select id="fixed-side">
          <option value="top" selected>top (left)</option>
          <option value="bottom">bottom (right)</option>
        </select>
      </label>
      <label>initial order
        <select id="order-method">
          <option value="alphabetical" selected>alphabetical</option>
          <option value="barycenter">barycenter</option>
          <option value="asInput">as input</option>
        </select>
      </label>
      <label>sweeps
        <input id="sweeps" type="number" min="0" value="1">
      </label>
      <label>objective
        <select id="objective">
          <option value="minSplits" selected>fewest splits</option>
          <option value="minSplitVertices">fewest split vertices</option>
          <option value="minCrossings">fewest crossings (budget)</option>
        </select>
      </label>
      <label>method
        <select id="method">
          <option value="exact" selected>exact</option>
          <option value="max-span">max-span heuristic</option>
          <option value="cr-count">cr-count heuristic</option>
        </select>
      </label>
      <label>budget k
        <input id="budget" type="number" min="0" value="2">
      </label>
      <button id="draw" disabled>Draw</button>
      <button id="split" disabled>Split</button>
    </div>
    <div class="row badges">
      <span id="crossings-badge" class="badge" hidden></span>
      <span id="splits-badge" class="badge" hidden></span>
      <span id="notice" class="notice" hidden></span>
    </div>
    <div id="toast" class="toast" hidden></div>
  </div>
  <div id="canvas" class="canvas">
    <svg id="drawing" xmlns="http://www.w3.org/2000/svg"></svg>
  </div>
  <div id="tooltip" class="tooltip" hidden></div>
`;

export class Viewer {
  readonly state: ViewState = {
    dataset: null,
    stats: null,
    document: null,
    selection: null,
    pending: false,
  };

  private readonly input: HTMLTextAreaElement;
  private readonly statsLine: HTMLElement;
  private readonly inlineError: HTMLElement;
  private readonly drawButton: HTMLButtonElement;
  private readonly splitButton: HTMLButtonElement;
  private readonly fixedSide: HTMLSelectElement;
  private readonly orderMethod: HTMLSelectElement;
  private readonly sweeps: HTMLInputElement;
  private readonly objective: HTMLSelectElement;
  private readonly method: HTMLSelectElement;
  private readonly budget: HTMLInputElement;
  private readonly crossingsBadge: HTMLElement;
  private readonly splitsBadge: HTMLElement;
  private readonly notice: HTMLElement;
  private readonly toast: HTMLElement;
  private readonly svg: SVGSVGElement;
  private readonly tooltip: HTMLElement;

  constructor(root: HTMLElement) {
    root.innerHTML = SHELL;
    const pick = <T extends Element>(selector: string): T => {
      const node = root.querySelector(selector);
      if (!node) throw new Error(`missing element ${selector}`);
      return node as T;
    };
    this.input = pick("#dataset-input");
    this.statsLine = pick("#dataset-stats");
    this.inlineError = pick("#dataset-error");
    this.drawButton = pick("#draw");
    this.splitButton = pick("#split");
    this.fixedSide = pick("#fixed-side");
    this.orderMethod = pick("#order-method");
    this.sweeps = pick("#sweeps");
    this.objective = pick("#objective");
    this.method = pick("#method");
    this.budget = pick("#budget");
    this.crossingsBadge = pick("#crossings-badge");
    this.splitsBadge = pick("#splits-badge");
    this.notice = pick("#notice");
    this.toast = pick("#toast");
    this.svg = pick("#drawing");
    this.tooltip = pick("#tooltip");

    this.input.addEventListener("input", () =>
      this.loadDatasetText(this.input.value),
    );
    this.drawButton.addEventListener("click", () => void this.draw());
    this.splitButton.addEventListener("click", () => void this.split());
    this.objective.addEventListener("change", () => this.updateControls());
    this.updateControls();
  }

  /** Parse the text area. Empty text clears the stats; garbage shows an
   * inline message and leaves the loaded dataset untouched. */
  loadDatasetText(text: string): void {
    if (text.trim() === "") {
      this.state.dataset = null;
      this.state.stats = null;
      this.statsLine.textContent = "";
      this.inlineError.hidden = true;
      this.updateControls();
      return;
    }
    try {
      const parsed = parseDataset(text);
      this.state.dataset = parsed.data;
      this.state.stats = parsed.stats;
      this.statsLine.textContent =
        `top ${parsed.stats.topCount} / bottom ${parsed.stats.bottomCount}` +
        ` vertices, ${parsed.stats.edgeCount} edges`;
      this.inlineError.hidden = true;
    } catch (exc) {
      this.inlineError.textContent = (exc as Error).message;
      this.inlineError.hidden = false;
    }
    this.updateControls();
  }

  currentConfig(): RunConfigJson {
    const config: RunConfigJson = {
      fixedSide: this.fixedSide.value as RunConfigJson["fixedSide"],
      orderMethod: this.orderMethod.value as RunConfigJson["orderMethod"],
      barycenterSweeps: Number(this.sweeps.value) || 0,
      objective: this.objective.value as RunConfigJson["objective"],
    };
    if (config.objective === "minCrossings") {
      config.method = this.method.value as RunConfigJson["method"];
      config.splitBudget = Number(this.budget.value) || 0;
    }
    return config;
  }

  async draw(): Promise<void> {
    if (this.state.dataset === null || this.state.pending) return;
    await this.requestDocument(() =>
      requestLayout(this.state.dataset, this.currentConfig()),
    );
  }

  async split(): Promise<void> {
    const current = this.state.document;
    if (current === null || this.state.pending) return;
    const updated = await this.requestDocument(() =>
      requestSplit(current, this.currentConfig()),
    );
    if (updated && updated.splits.totalSplits === 0) {
      this.notice.textContent =
        "0 splits — the layout was already crossing-free";
      this.notice.hidden = false;
    }
  }

  private async requestDocument(
    send: () => Promise<LayoutDocumentJson>,
  ): Promise<LayoutDocumentJson | null> {
    this.state.pending = true;
    this.updateControls();
    try {
      const doc = await send();
      this.toast.hidden = true;
      this.notice.hidden = true;
      this.setDocument(doc);
      return doc;
    } catch (exc) {
      // keep the previous layout; just surface the message
      this.toast.textContent = (exc as Error).message;
      this.toast.hidden = false;
      return null;
    } finally {
      this.state.pending = false;
      this.updateControls();
    }
  }

  setDocument(doc: LayoutDocumentJson): void {
    this.state.document = doc;
    this.state.selection = null;
    this.crossingsBadge.textContent = `crossings: ${doc.crossings}`;
    this.crossingsBadge.hidden = false;
    this.splitsBadge.textContent =
      `splits: ${doc.splits.totalSplits} · ` +
      `split vertices: ${doc.splits.splitVertices} · ` +
      `max: ${doc.splits.maxSplits}`;
    this.splitsBadge.hidden = false;
    this.render();
    this.updateControls();
  }

  highlight(id: string | null): void {
    this.state.selection = id;
    this.render();
  }

  private render(): void {
    const doc = this.state.document;
    if (!doc) return;
    renderLayout(this.svg, doc, this.state.selection, {
      onVertexClick: (id) => this.highlight(id),
      onBackgroundClick: () => this.highlight(null),
      onVertexEnter: (id, event) => this.showTooltip(id, event),
      onVertexLeave: () => {
        this.tooltip.hidden = true;
      },
    });
  }

  private showTooltip(id: string, event: MouseEvent): void {
    const doc = this.state.document;
    if (!doc) return;
    const info: VertexInfo | undefined = vertexIndex(doc.graph).get(id);
    if (!info) return;
    this.tooltip.replaceChildren();
    for (const line of [
      info.record.label,
      `degree ${info.degree}`,
      `id ${id}`,
    ]) {
      const div = document.createElement("div");
      div.textContent = line;
      this.tooltip.appendChild(div);
    }
    this.tooltip.style.left = `${event.clientX + 12}px`;
    this.tooltip.style.top = `${event.clientY + 12}px`;
    this.tooltip.hidden = false;
  }

  updateControls(): void {
    const { dataset, document: doc, pending } = this.state;
    this.drawButton.disabled = pending || dataset === null;
    this.splitButton.disabled = pending || doc === null;
    const budgeted = this.objective.value === "minCrossings";
    this.method.disabled = pending || !budgeted;
    this.budget.disabled = pending || !budgeted;
    for (const control of [this.fixedSide, this.orderMethod, this.sweeps,
      this.objective, this.input]) {
      control.disabled = pending;
    }
  }
}
