// The UI talks to exactly two endpoints.
export const PROCESS_URL = "/api/v1/process";
export const HEALTH_URL = "/api/v1/health";

export interface Violation {
  field: string;
  message: string;
}

export type ApiResponse =
  | { kind: "ok"; body: Record<string, unknown> }
  | { kind: "invalid"; violations: Violation[]; error: string }
  | { kind: "network"; message: string };

export async function processText(
  payload: Record<string, unknown>,
  signal?: AbortSignal
): Promise<ApiResponse> {
  let resp: Response;
  try {
    resp = await fetch(PROCESS_URL, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
      signal,
    });
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") throw err;
    return { kind: "network", message: err instanceof Error ? err.message : String(err) };
  }
  let body: Record<string, unknown>;
  try {
    body = await resp.json();
  } catch {
    return { kind: "network", message: `unreadable response (HTTP ${resp.status})` };
  }
  if (resp.ok) return { kind: "ok", body };
  const violations = Array.isArray(body.violations) ? (body.violations as Violation[]) : [];
  return {
    kind: "invalid",
    violations,
    error: typeof body.error === "string" ? body.error : `HTTP ${resp.status}`,
  };
}

export async function health(): Promise<boolean> {
  try {
    const resp = await fetch(HEALTH_URL);
    return resp.ok;
  } catch {
    return false;
  }
}
