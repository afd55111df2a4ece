// Contract test against a live engine.  Start one with, e.g.:
//   latgame serve --game game.json --strategy strategy.json --port 8321
// then run LATGAME_SERVER_URL=http://127.0.0.1:8321 npx vitest run
// (skipped when the variable is unset).

import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { loadBoard, markCurrent } from "../src/board.js";
import { congruenceProbe } from "../src/congruence.js";
import { humanMove } from "../src/play.js";

const base = process.env.LATGAME_SERVER_URL;

describe.skipIf(!base)("live server contract", () => {
    const api = () => new ApiClient(base!);

    it("renders even-even cells as P at level 20", async () => {
        const view = await loadBoard(api(), 20);
        expect(view.cells.size).toBeGreaterThan(0);
        for (const [key, cell] of view.cells) {
            const [x, y] = key.split(",").map(Number);
            const even = x % 2 === 0 && y % 2 === 0;
            expect(cell.label, key).toBe(even ? "P" : "N");
        }
    });

    it("replies into the P-set from a blundered (1,2) session",
       async () => {
        const client = api();
        const meta = await client.meta();
        const view = await loadBoard(client, 20);
        markCurrent(view, [1, 2], meta.gamma);
        const outcome = await humanMove(client, meta, view, [1, 1]);
        expect(outcome.result.engine_move).not.toBeNull();
        const { label } = await client.classify(outcome.finalPosition);
        expect(label).toBe("P");
    });

    it("reproduces both congruence verdicts", async () => {
        const certified = await congruenceProbe(api(), [0, 0], [2, 0]);
        expect(certified.verdict!.kind).toBe("congruent-certified");
        const split = await congruenceProbe(api(), [0, 0], [1, 0]);
        expect(split.verdict!.kind).toBe("distinguished");
        expect(split.witnessCell).not.toBeNull();
    });
});
