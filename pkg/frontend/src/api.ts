// Typed client for the latgame HTTP API.  This module is the only place
// that talks to the network; everything above it works on its responses.

export type Label = "P" | "N" | "D";

export interface Meta {
    d: number;
    gamma: number[][];
    ell: number[];
    defeated_generators: number[][];
    has_strategy: boolean;
}

export interface RegionCell {
    pos: number[];
    label: Label;
}

export interface Region {
    level: number;
    labels: RegionCell[];
}

export interface PlayResult {
    after_human: number[];
    label: Label | "N";
    engine_move: number[] | null;
    after_engine?: number[];
    terminal: boolean;
    no_winning_move: boolean;
    legal_moves: number[][];
}

export interface CongruenceVerdict {
    kind: "distinguished" | "congruent-certified" | "congruent-probable";
    witness: number[] | null;
    evidence: { radius: number; specializations: number };
}

/** Server rejected the request (bad position, off-board, ...). */
export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
    }
}

/** The server could not be reached at all. */
export class OfflineError extends Error {
    constructor(cause: unknown) {
        super(`engine unreachable: ${String(cause)}`);
    }
}

export class ApiClient {
    constructor(private readonly base: string = "") {}

    private async request<T>(path: string, body?: unknown): Promise<T> {
        let response: Response;
        try {
            response = await fetch(this.base + path, body === undefined
                ? undefined
                : {
                    method: "POST",
                    headers: { "Content-Type": "application/json" },
                    body: JSON.stringify(body),
                });
        } catch (err) {
            throw new OfflineError(err);
        }
        const data = await response.json().catch(() => ({}));
        if (!response.ok) {
            const message = typeof data === "object" && data !== null
                ? (data as Record<string, unknown>).message
                    ?? (data as Record<string, unknown>).detail
                    ?? response.statusText
                : response.statusText;
            throw new ApiError(response.status, String(message));
        }
        return data as T;
    }

    meta(): Promise<Meta> {
        return this.request<Meta>("/api/meta");
    }

    region(level: number): Promise<Region> {
        return this.request<Region>(`/api/region?level=${level}`);
    }

    classify(pos: number[]): Promise<{ label: Label }> {
        return this.request("/api/classify", { pos });
    }

    move(pos: number[]): Promise<{ moves: number[][] }> {
        return this.request("/api/move", { pos });
    }

    play(pos: number[], move: number[]): Promise<PlayResult> {
        return this.request("/api/play", { pos, move });
    }

    congruent(p: number[], q: number[],
              radius?: number): Promise<CongruenceVerdict> {
        return this.request("/api/congruent",
            radius === undefined ? { p, q } : { p, q, radius });
    }
}
