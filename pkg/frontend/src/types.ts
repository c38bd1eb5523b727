// Wire types for the /api/v1 endpoints. Field names mirror the service's
// JSON schema exactly.

export type VcStatus = "proved" | "unprovable" | "timeout";

export interface TraceStep {
  rule: string;
  detail: string;
  fact: string;
}

export interface VcResult {
  id: string;
  line: number;
  kind: string;
  status: VcStatus;
  ms: number;
  goal: string;
  givens: string[];
  description: string;
  trace?: TraceStep[];
}

export interface Totals {
  proved: number;
  unprovable: number;
  timeout: number;
  ms: number;
}

export interface VerifyReport {
  module: string;
  diagnostics: Diagnostic[];
  vcs: VcResult[];
  totals: Totals;
}

export interface Diagnostic {
  severity: "error" | "warning";
  message: string;
  line: number;
  column: number;
}

export interface ComponentNode {
  id: string;
  name: string;
  kind: "concept" | "enhancement" | "realization" | "facility";
  editable: boolean;
  children: ComponentNode[];
}

export interface VerifyFailure {
  diagnostics: Diagnostic[];
}

export type VerifyOutcome =
  | { ok: true; report: VerifyReport }
  | { ok: false; diagnostics: Diagnostic[] };
