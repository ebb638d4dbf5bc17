import type { AnalysisParams } from "./types";

// Server-side defaults; sliders start here.
export const DEFAULT_PARAMS: AnalysisParams = {
  delta_s: 40,
  f_t_char: 0.2,
  f_t_place: 0.4,
  i_t: 0.35,
  kernel: "linear",
};

export interface SliderRange {
  min: number;
  max: number;
  step: number;
  label: string;
}

export const SLIDER_RANGES: Record<keyof Omit<AnalysisParams, "kernel">, SliderRange> = {
  delta_s: { min: 1, max: 200, step: 1, label: "distance cutoff (words)" },
  f_t_char: { min: 0, max: 1, step: 0.01, label: "character threshold" },
  f_t_place: { min: 0, max: 1, step: 0.01, label: "place threshold" },
  i_t: { min: 0, max: 1, step: 0.01, label: "interaction threshold" },
};

export function clampParam(name: keyof typeof SLIDER_RANGES, value: number): number {
  const range = SLIDER_RANGES[name];
  if (Number.isNaN(value)) return range.min;
  const clamped = Math.min(range.max, Math.max(range.min, value));
  return name === "delta_s" ? Math.round(clamped) : clamped;
}

export function clampParams(params: AnalysisParams): AnalysisParams {
  return {
    delta_s: clampParam("delta_s", params.delta_s),
    f_t_char: clampParam("f_t_char", params.f_t_char),
    f_t_place: clampParam("f_t_place", params.f_t_place),
    i_t: clampParam("i_t", params.i_t),
    kernel: params.kernel === "exponential" ? "exponential" : "linear",
  };
}
