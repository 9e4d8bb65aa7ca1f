import { RANGES, SLIDER_FIELDS, fieldRange } from "./ranges";
import { UiState, initialState, setNumericField, buildPayload } from "./state";
import { processText, Violation } from "./api";
import { debounce, DEBOUNCE_MS } from "./debounce";

export interface Controller {
  readonly root: HTMLElement;
  state: UiState;
  onControlChange(field: string, value: number): void;
  onToggleChange(field: "summarize" | "bold_numeric", checked: boolean): void;
  onTextChange(text: string): void;
  submit(): Promise<void>;
}

function controlRow(field: string, value: number): HTMLElement {
  const r = fieldRange(field)!;
  const row = document.createElement("div");
  row.className = "control";
  row.dataset.field = field;

  const label = document.createElement("label");
  label.htmlFor = `ctl-${field}`;
  label.textContent = r.label;

  const input = document.createElement("input");
  input.type = "range";
  input.id = `ctl-${field}`;
  input.min = String(r.min);
  input.max = String(r.max);
  input.step = String(r.step);
  input.value = String(value);
  input.dataset.field = field;

  const out = document.createElement("output");
  out.textContent = String(value);

  const error = document.createElement("span");
  error.className = "field-error";
  error.dataset.errorFor = field;

  row.append(label, input, out, error);
  return row;
}

function toggleRow(field: string, labelText: string, checked: boolean): HTMLElement {
  const row = document.createElement("div");
  row.className = "control control-toggle";
  row.dataset.field = field;
  const label = document.createElement("label");
  const input = document.createElement("input");
  input.type = "checkbox";
  input.id = `ctl-${field}`;
  input.checked = checked;
  input.dataset.field = field;
  label.append(input, document.createTextNode(" " + labelText));
  const error = document.createElement("span");
  error.className = "field-error";
  error.dataset.errorFor = field;
  row.append(label, error);
  return row;
}

export function createController(
  root: HTMLElement,
  opts: { debounceMs?: number } = {}
): Controller {
  const state0 = initialState();

  root.innerHTML = "";
  const textarea = document.createElement("textarea");
  textarea.id = "text-input";
  textarea.placeholder = "Paste text to read faster";
  const textError = document.createElement("span");
  textError.className = "field-error";
  textError.dataset.errorFor = "text";

  const controls = document.createElement("div");
  controls.id = "controls";
  controls.append(toggleRow("summarize", "Summarize", state0.options.summarize));
  for (const field of SLIDER_FIELDS) {
    controls.append(controlRow(field, RANGES[field].default));
  }
  controls.append(toggleRow("bold_numeric", "Bold numbers", state0.options.bolding.bold_numeric));

  const submitBtn = document.createElement("button");
  submitBtn.id = "submit";
  submitBtn.textContent = "Preview";
  submitBtn.disabled = true;

  const banner = document.createElement("div");
  banner.id = "banner";
  banner.hidden = true;

  const stats = document.createElement("div");
  stats.id = "stats";

  const preview = document.createElement("div");
  preview.id = "preview";

  root.append(textarea, textError, controls, submitBtn, banner, stats, preview);

  const ctl: Controller = {
    root,
    state: state0,
    onControlChange,
    onToggleChange,
    onTextChange,
    submit,
  };

  let inflight: AbortController | null = null;
  let seq = 0;

  function clearErrors(): void {
    for (const el of root.querySelectorAll<HTMLElement>(".field-error")) {
      el.textContent = "";
    }
    for (const el of root.querySelectorAll(".invalid")) {
      el.classList.remove("invalid");
    }
  }

  function showViolations(violations: Violation[], fallback: string): void {
    clearErrors();
    let placed = false;
    for (const v of violations) {
      const slot = root.querySelector<HTMLElement>(`[data-error-for="${v.field}"]`);
      if (slot) {
        slot.textContent = v.message;
        slot.closest(".control")?.classList.add("invalid");
        placed = true;
      }
    }
    if (!placed) {
      banner.hidden = false;
      banner.textContent = fallback;
    }
  }

  function syncControls(): void {
    const { options } = ctl.state;
    const flat: Record<string, number> = {
      ratio: options.ratio,
      ...options.typography,
      fixation_ratio: options.bolding.fixation_ratio,
      min_word_length: options.bolding.min_word_length,
    };
    for (const field of SLIDER_FIELDS) {
      const input = root.querySelector<HTMLInputElement>(`input[data-field="${field}"]`);
      const out = input?.parentElement?.querySelector("output");
      if (input && field in flat) {
        input.value = String(flat[field]);
        if (out) out.textContent = String(flat[field]);
      }
    }
    submitBtn.disabled = ctl.state.text.length === 0 || ctl.state.pending;
  }

  async function submit(): Promise<void> {
    if (ctl.state.text.length === 0) return;
    inflight?.abort();
    const controller = new AbortController();
    inflight = controller;
    const mySeq = ++seq;

    ctl.state = { ...ctl.state, pending: true };
    syncControls();
    let result;
    try {
      result = await processText(buildPayload(ctl.state), controller.signal);
    } catch {
      return; // superseded by a newer submit
    }
    if (mySeq !== seq) return; // a newer response already landed

    ctl.state = { ...ctl.state, pending: false };
    inflight = null;
    if (result.kind === "ok") {
      clearErrors();
      banner.hidden = true;
      banner.textContent = "";
      const body = result.body;
      const last = {
        output: String(body.output ?? ""),
        sentences_in: Number(body.sentences_in ?? 0),
        sentences_out: Number(body.sentences_out ?? 0),
        elapsed_ms: Number(body.elapsed_ms ?? 0),
      };
      ctl.state = { ...ctl.state, lastResult: last };
      // server-rendered HTML goes in verbatim; the UI adds nothing
      preview.innerHTML = last.output;
      stats.textContent = `${last.sentences_out} of ${last.sentences_in} sentences`;
    } else if (result.kind === "invalid") {
      showViolations(result.violations, result.error);
    } else {
      // network failure: keep the last good preview, show a banner
      banner.hidden = false;
      banner.textContent = `request failed: ${result.message}`;
    }
    syncControls();
  }

  const debouncedSubmit = debounce(() => void submit(), opts.debounceMs ?? DEBOUNCE_MS);

  function onControlChange(field: string, value: number): void {
    ctl.state = setNumericField(ctl.state, field, value);
    syncControls();
    debouncedSubmit();
  }

  function onToggleChange(field: "summarize" | "bold_numeric", checked: boolean): void {
    if (field === "summarize") {
      ctl.state = { ...ctl.state, options: { ...ctl.state.options, summarize: checked } };
    } else {
      ctl.state = {
        ...ctl.state,
        options: {
          ...ctl.state.options,
          bolding: { ...ctl.state.options.bolding, bold_numeric: checked },
        },
      };
    }
    debouncedSubmit();
  }

  function onTextChange(text: string): void {
    ctl.state = { ...ctl.state, text };
    submitBtn.disabled = text.length === 0;
    if (text.length > 0) debouncedSubmit();
    else debouncedSubmit.cancel();
  }

  textarea.addEventListener("input", () => onTextChange(textarea.value));
  controls.addEventListener("input", (ev) => {
    const input = ev.target as HTMLInputElement;
    const field = input.dataset.field;
    if (!field) return;
    if (input.type === "checkbox") {
      onToggleChange(field as "summarize" | "bold_numeric", input.checked);
    } else {
      onControlChange(field, Number(input.value));
    }
  });
  submitBtn.addEventListener("click", () => void submit());

  return ctl;
}
