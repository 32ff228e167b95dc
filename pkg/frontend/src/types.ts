export interface QuiverJson {
  n: number;
  m: number;
  arrows: [number, number, number][];
}

export interface TypeIClassification {
  verdict: 'TypeI';
  a: number;
  b: number;
  x: number[];
  y: number[];
  components: number[][];
  both_types: boolean;
}

export interface TypeIIClassification {
  verdict: 'TypeII';
  cycle: number[];
  cliques: number[][];
  components: number[][];
}

export interface NotMemberClassification {
  verdict: 'NotMember';
  reason: string;
}

export type Classification =
  | TypeIClassification
  | TypeIIClassification
  | NotMemberClassification;

export interface SessionResponse {
  id: string;
  quiver: QuiverJson;
}

export interface MutateResponse {
  quiver: QuiverJson;
  classification: Classification;
  depth: number;
}

export interface OrbitMember {
  key: string;
  quiver: QuiverJson;
}

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<number, Point>;
