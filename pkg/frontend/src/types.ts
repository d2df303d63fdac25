export interface Point {
  x: number;
  y: number;
}

export type Mode = "scalar" | "parametric";
export type Parameterization = "chord" | "uniform";

export interface Diagnostics {
  dominance_margins: number[];
  c1_residuals: number[];
  interp_value_residuals: number[];
  interp_slope_residuals: number[];
  hull_margin: number;
}

export interface ScalarResponse {
  mode: "scalar";
  alpha: number[];
  strict: boolean;
  phi: number[];
  q: number[];
  domain: [number, number];
  samples: [number, number][];
  diagnostics: Diagnostics;
}

export interface ParametricResponse {
  mode: "parametric";
  parameterization: Parameterization;
  alpha: number[];
  strict: boolean;
  t: number[];
  phi: { x: number[]; y: number[] };
  q: { x: number[]; y: number[] };
  domain: [number, number];
  samples: [number, number, number][];
  diagnostics: Diagnostics;
}

export type SplineResponse = ScalarResponse | ParametricResponse;

export interface ScalarRequest {
  mode: "scalar";
  tau: number[];
  F: number[];
  alpha: number[];
  strict: boolean;
  samples: number;
}

export interface ParametricRequest {
  mode: "parametric";
  points: [number, number][];
  parameterization: Parameterization;
  alpha: number[];
  strict: boolean;
  samples: number;
}

export type SplineRequest = ScalarRequest | ParametricRequest;

export interface ExampleData {
  id: number;
  name: string;
  tau: number[];
  F: number[];
}

export interface ServiceError {
  pointer: string;
  code: string;
  message: string;
}
