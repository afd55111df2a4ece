// Congruence probe panel: ask the server whether two positions are
// misere congruent and prepare a display model.

import { ApiClient, ApiError, CongruenceVerdict, OfflineError } from "./api.js";

export interface ProbePanel {
    verdict: CongruenceVerdict | null;
    text: string;
    witnessCell: [number, number] | null;
    error: string | null;
}

export async function congruenceProbe(api: ApiClient, p: number[],
                                      q: number[],
                                      radius?: number): Promise<ProbePanel> {
    let verdict: CongruenceVerdict;
    try {
        verdict = await api.congruent(p, q, radius);
    } catch (err) {
        if (err instanceof ApiError || err instanceof OfflineError) {
            return { verdict: null, text: "", witnessCell: null,
                     error: err.message };
        }
        throw err;
    }
    let text: string;
    let witnessCell: [number, number] | null = null;
    switch (verdict.kind) {
        case "congruent-certified":
            text = "congruent (certified)";
            break;
        case "congruent-probable":
            text = `probably congruent (${verdict.evidence.specializations}`
                + " agreeing specializations)";
            break;
        case "distinguished": {
            const w = verdict.witness!;
            text = `distinguished: outcomes differ after adding (${w.join(",")})`;
            if (w.length === 2) witnessCell = [w[0], w[1]];
            break;
        }
    }
    return { verdict, text, witnessCell, error: null };
}
