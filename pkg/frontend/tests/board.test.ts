import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient, OfflineError } from "../src/api.js";
import {
    cellKey, changeLevel, labelAt, loadBoard, markCurrent, nativeSlice,
    toCell, toPosition,
} from "../src/board.js";
import { GAMMA, mockFetch, mockOffline } from "./mockServer.js";

describe("BoardView", () => {
    beforeEach(() => {
        mockFetch();
    });

    it("renders even-even cells as P at level 20", async () => {
        const view = await loadBoard(new ApiClient(), 20);
        for (const [key, cell] of view.cells) {
            const [x, y] = key.split(",").map(Number);
            expect(cell.label).toBe(x % 2 === 0 && y % 2 === 0 ? "P" : "N");
        }
        expect(labelAt(view, 4, 2)).toBe("P");
        expect(labelAt(view, 30, 0)).toBeNull(); // outside the sublevel
    });

    it("shows at most the origin-level cells at level 0", async () => {
        const view = await loadBoard(new ApiClient(), 0);
        expect([...view.cells.keys()]).toEqual(["0,0"]);
    });

    it("keeps overlapping cells unchanged across level changes",
       async () => {
        const api = new ApiClient();
        const small = await loadBoard(api, 8);
        const before = new Map(
            [...small.cells].map(([k, c]) => [k, c.label]));
        const big = await changeLevel(api, small, 16);
        for (const [key, label] of before) {
            expect(big.cells.get(key)?.label).toBe(label);
        }
    });

    it("marks the current cell and server-known reachable cells", () => {
        const cells = new Map([
            ["1,2", { label: "N" as const, current: false,
                      reachable: false }],
            ["0,2", { label: "P" as const, current: false,
                      reachable: false }],
            ["1,1", { label: "N" as const, current: false,
                      reachable: false }],
        ]);
        const view = { level: 8, d: 2, slice: nativeSlice(2), cells,
                       current: null, history: [] };
        markCurrent(view, [1, 2], GAMMA);
        expect(cells.get("1,2")!.current).toBe(true);
        expect(cells.get("0,2")!.reachable).toBe(true);  // via [1,0]
        expect(cells.get("1,1")!.reachable).toBe(true);  // via [0,1]
    });

    it("projects higher-dimensional positions through a slice", () => {
        const slice = { xAxis: 0, yAxis: 3, pinned: [0, 1, 0, 0, 2] };
        expect(toCell(slice, [4, 1, 0, 7, 2])).toEqual([4, 7]);
        expect(toCell(slice, [4, 0, 0, 7, 2])).toBeNull();
        expect(toPosition(slice, 4, 7)).toEqual([4, 1, 0, 7, 2]);
    });

    it("cannot classify anything when the server is down", async () => {
        mockOffline();
        await expect(loadBoard(new ApiClient(), 20))
            .rejects.toBeInstanceOf(OfflineError);
    });

    it("uses string keys consistently", () => {
        expect(cellKey(3, 4)).toBe("3,4");
    });
});
