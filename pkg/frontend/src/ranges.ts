// Client-side copies of the server's documented parameter ranges.
// Sliders clamp at these bounds, so every payload we send is schema-valid.

export interface FieldRange {
  min: number;
  max: number;
  step: number;
  default: number;
  // where the payload field lives in the request body
  group: "top" | "typography" | "bolding";
  label: string;
}

export const RANGES = {
  ratio: { min: 0.05, max: 1, step: 0.05, default: 0.3, group: "top", label: "Summary ratio" },
  fixation_ratio: { min: 0.05, max: 1, step: 0.05, default: 0.5, group: "bolding", label: "Fixation ratio" },
  min_word_length: { min: 1, max: 10, step: 1, default: 1, group: "bolding", label: "Min word length" },
  line_spacing: { min: 1, max: 3, step: 0.1, default: 1.5, group: "typography", label: "Line spacing" },
  word_spacing_em: { min: 0, max: 1, step: 0.01, default: 0.16, group: "typography", label: "Word spacing (em)" },
  letter_spacing_em: { min: 0, max: 0.5, step: 0.01, default: 0.03, group: "typography", label: "Letter spacing (em)" },
  font_size_px: { min: 8, max: 72, step: 1, default: 18, group: "typography", label: "Font size (px)" },
  bold_weight: { min: 100, max: 900, step: 100, default: 700, group: "typography", label: "Bold weight" },
  regular_weight: { min: 100, max: 900, step: 100, default: 400, group: "typography", label: "Regular weight" },
  bold_size_scale: { min: 0.8, max: 1.5, step: 0.05, default: 1.0, group: "typography", label: "Bold size scale" },
} satisfies Record<string, FieldRange>;

export type SliderField = keyof typeof RANGES;

export const SLIDER_FIELDS = Object.keys(RANGES) as SliderField[];

export function fieldRange(field: string): FieldRange | undefined {
  return (RANGES as Record<string, FieldRange>)[field];
}

// Snaps to the field's step grid and clamps to its bounds. Out-of-range
// keyboard entry and drags past the ends both land inside the range.
export function clamp(field: string, value: number): number {
  const r = fieldRange(field);
  if (!r) throw new Error(`unknown field: ${field}`);
  if (!Number.isFinite(value)) return r.default;
  const snapped = r.min + Math.round((value - r.min) / r.step) * r.step;
  const bounded = Math.min(r.max, Math.max(r.min, snapped));
  // avoid 0.30000000000000004-style drift from the grid arithmetic
  return Number(bounded.toFixed(6));
}
