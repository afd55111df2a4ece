import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { loadBoard, markCurrent } from "../src/board.js";
import { humanMove, positionBanner } from "../src/play.js";
import { mockFetch } from "./mockServer.js";

async function session(start: number[]) {
    const api = new ApiClient();
    const meta = await api.meta();
    const view = await loadBoard(api, 20);
    markCurrent(view, start, meta.gamma);
    return { api, meta, view };
}

describe("play session", () => {
    beforeEach(() => {
        mockFetch();
    });

    it("engine replies into the P-set after a blunder from (1,2)",
       async () => {
        const { api, meta, view } = await session([1, 2]);
        // human moves to the N-position (1,1); engine must answer with a
        // winning move, landing on a P-labelled cell of the server region
        const outcome = await humanMove(api, meta, view, [1, 1]);
        expect(outcome.result.engine_move).not.toBeNull();
        const [x, y] = outcome.finalPosition;
        expect(view.cells.get(`${x},${y}`)!.label).toBe("P");
        expect(view.history).toHaveLength(2);
        expect(view.history[0]).toContain("(1,2) -> (1,1)");
    });

    it("reports when the engine has no winning move", async () => {
        const { api, meta, view } = await session([1, 2]);
        const outcome = await humanMove(api, meta, view, [0, 2]);
        expect(outcome.result.no_winning_move).toBe(true);
        expect(outcome.banner).toMatch(/no winning move/);
        expect(outcome.finalPosition).toEqual([0, 2]);
    });

    it("ends the game when no legal move remains", async () => {
        const { api, meta, view } = await session([1, 0]);
        const outcome = await humanMove(api, meta, view, [0, 0]);
        expect(outcome.result.terminal).toBe(true);
        expect(outcome.banner).toMatch(/game over/);
    });

    it("rejects targets that are not one move away", async () => {
        const { api, meta, view } = await session([4, 2]);
        await expect(humanMove(api, meta, view, [1, 1]))
            .rejects.toThrow(/not one move away/);
    });

    it("surfaces the server's off-board rejection", async () => {
        const { api, meta, view } = await session([0, 1]);
        markCurrent(view, [0, 0], meta.gamma);
        await expect(humanMove(api, meta, view, [-1, 0]))
            .rejects.toBeInstanceOf(ApiError);
    });

    it("banners follow the server label", () => {
        expect(positionBanner("P")).toMatch(/no winning move exists/);
        expect(positionBanner("N")).toMatch(/winning move exists/);
    });
});
