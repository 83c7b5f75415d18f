// Shapes of the /api/v1 JSON bodies. The service is the single source of
// truth for game rules; these types only describe what it sends.

export interface CellRef {
  i: number;
  j: number;
}

export interface GameStateJson {
  w: number;
  h: number;
  poison: CellRef;
  mover: "human" | "engine";
  terminal: boolean;
}

export interface MoveJson {
  axis: "vertical" | "horizontal";
  cut: number;
}

export interface HistoryEntry {
  by: "human" | "engine";
  move: MoveJson;
  state: GameStateJson;
}

export interface GameSnapshot {
  state: GameStateJson;
  legal_moves: MoveJson[];
  history: HistoryEntry[];
  winner?: "human" | "engine";
}

export interface CreateGameResponse {
  id: string;
  state: GameStateJson;
  legal_moves: MoveJson[];
  classification: "P" | "N";
  winner?: "human" | "engine";
}

export interface MoveResponse {
  human_move: MoveJson;
  state_after_human: GameStateJson;
  engine_move: MoveJson | null;
  state: GameStateJson;
  legal_moves: MoveJson[];
  winner?: "human" | "engine";
}

export interface PatternResponse {
  m: number;
  g: number;
  cells: [number, number][];
}

export interface DiamondJson {
  cx_num: number;
  cy_num: number;
  r_num: number;
  den: number;
}

export interface FractionJson {
  num: number;
  den: number;
}

export interface SimilarityJson {
  matrix: [[number, number], [number, number]];
  scale: FractionJson;
  translation: [FractionJson, FractionJson];
}

export interface SectionResponse {
  diamonds: DiamondJson[];
  count: number;
  similarity: SimilarityJson | null;
}

export interface NimpassResponse {
  blue: [number, number][];
  red: [number, number][];
}
