/** Wire types mirroring the service's JSON documents. */

export interface VertexRecordJson {
  id: string;
  label: string;
  originalId?: string | null;
}

export interface GraphJson {
  top: VertexRecordJson[];
  bottom: VertexRecordJson[];
  edges: [string, string][];
}

export interface LayerOrderJson {
  top: string[];
  bottom: string[];
}

export interface SplitsJson {
  perOriginal: Record<string, string[][]>;
  totalSplits: number;
  splitVertices: number;
  maxSplits: number;
}

export interface SplitStepJson {
  splitVertex: string;
  left: string[];
  right: string[];
  predictedGain?: number;
  objectiveValue?: number;
}

export interface RunConfigJson {
  fixedSide: "top" | "bottom";
  orderMethod: "alphabetical" | "barycenter" | "asInput";
  barycenterSweeps?: number;
  objective: "minSplits" | "minSplitVertices" | "minCrossings";
  splitBudget?: number;
  crossingBound?: number | null;
  method?: "exact" | "max-span" | "cr-count";
}

export interface LayoutDocumentJson {
  graph: GraphJson;
  order: LayerOrderJson;
  splits: SplitsJson;
  crossings: number;
  config: RunConfigJson;
  steps?: SplitStepJson[];
}
