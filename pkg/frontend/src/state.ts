import { RANGES, clamp, fieldRange } from "./ranges";

export interface TypographyOptions {
  line_spacing: number;
  word_spacing_em: number;
  letter_spacing_em: number;
  font_size_px: number;
  bold_weight: number;
  regular_weight: number;
  bold_size_scale: number;
}

export interface BoldingOptions {
  fixation_ratio: number;
  min_word_length: number;
  bold_numeric: boolean;
}

export interface ProcessOptions {
  summarize: boolean;
  ratio: number;
  typography: TypographyOptions;
  bolding: BoldingOptions;
}

export interface ProcessResult {
  output: string;
  sentences_in: number;
  sentences_out: number;
  elapsed_ms: number;
}

export interface UiState {
  text: string;
  options: ProcessOptions;
  lastResult?: ProcessResult;
  pending: boolean;
}

export function initialState(): UiState {
  return {
    text: "",
    pending: false,
    options: {
      summarize: true,
      ratio: RANGES.ratio.default,
      typography: {
        line_spacing: RANGES.line_spacing.default,
        word_spacing_em: RANGES.word_spacing_em.default,
        letter_spacing_em: RANGES.letter_spacing_em.default,
        font_size_px: RANGES.font_size_px.default,
        bold_weight: RANGES.bold_weight.default,
        regular_weight: RANGES.regular_weight.default,
        bold_size_scale: RANGES.bold_size_scale.default,
      },
      bolding: {
        fixation_ratio: RANGES.fixation_ratio.default,
        min_word_length: RANGES.min_word_length.default,
        bold_numeric: false,
      },
    },
  };
}

// Applies one slider change: clamps to the documented range and keeps the
// regular <= bold weight constraint by dragging the other weight along.
export function setNumericField(state: UiState, field: string, value: number): UiState {
  const r = fieldRange(field);
  if (!r) throw new Error(`unknown field: ${field}`);
  const v = clamp(field, value);
  const next: UiState = {
    ...state,
    options: {
      ...state.options,
      typography: { ...state.options.typography },
      bolding: { ...state.options.bolding },
    },
  };
  if (r.group === "top") {
    (next.options as unknown as Record<string, number>)[field] = v;
  } else if (r.group === "typography") {
    (next.options.typography as unknown as Record<string, number>)[field] = v;
  } else {
    (next.options.bolding as unknown as Record<string, number>)[field] = v;
  }
  const typo = next.options.typography;
  if (field === "regular_weight" && typo.regular_weight > typo.bold_weight) {
    typo.bold_weight = typo.regular_weight;
  }
  if (field === "bold_weight" && typo.bold_weight < typo.regular_weight) {
    typo.regular_weight = typo.bold_weight;
  }
  return next;
}

// The request body for POST /api/v1/process. Preview is always HTML; the
// server is the only rendering authority.
export function buildPayload(state: UiState): Record<string, unknown> {
  return {
    text: state.text,
    summarize: state.options.summarize,
    ratio: state.options.ratio,
    format: "html",
    typography: { ...state.options.typography },
    bolding: { ...state.options.bolding },
  };
}
