// Board state derived from server responses only: the client never
// decides P/N itself, it paints whatever /api/region returned.

import { ApiClient, Label, Meta, Region } from "./api.js";

export interface CellState {
    label: Label;
    current: boolean;
    reachable: boolean;
}

/** A 2-d view of a d-dimensional board: two free axes, the rest pinned. */
export interface Slice {
    xAxis: number;
    yAxis: number;
    pinned: number[]; // full-length vector; free coordinates ignored
}

export interface BoardView {
    level: number;
    d: number;
    slice: Slice;
    cells: Map<string, CellState>;
    current: number[] | null;
    history: string[];
}

export function nativeSlice(d: number): Slice {
    return { xAxis: 0, yAxis: 1, pinned: new Array(d).fill(0) };
}

export const cellKey = (x: number, y: number) => `${x},${y}`;

/** Project a full position onto the slice, or null if off-slice. */
export function toCell(slice: Slice, pos: number[]): [number, number] | null {
    for (let i = 0; i < pos.length; i++) {
        if (i === slice.xAxis || i === slice.yAxis) continue;
        if (pos[i] !== slice.pinned[i]) return null;
    }
    return [pos[slice.xAxis], pos[slice.yAxis]];
}

/** Lift slice coordinates back to a full position. */
export function toPosition(slice: Slice, x: number, y: number): number[] {
    const pos = slice.pinned.slice();
    pos[slice.xAxis] = x;
    pos[slice.yAxis] = y;
    return pos;
}

function paint(region: Region, slice: Slice): Map<string, CellState> {
    const cells = new Map<string, CellState>();
    for (const entry of region.labels) {
        const cell = toCell(slice, entry.pos);
        if (cell === null) continue;
        cells.set(cellKey(cell[0], cell[1]),
            { label: entry.label, current: false, reachable: false });
    }
    return cells;
}

export async function loadBoard(api: ApiClient, level: number,
                                slice?: Slice): Promise<BoardView> {
    const meta = await api.meta();
    const region = await api.region(level);
    const view: BoardView = {
        level,
        d: meta.d,
        slice: slice ?? nativeSlice(meta.d),
        cells: paint(region, slice ?? nativeSlice(meta.d)),
        current: null,
        history: [],
    };
    return view;
}

/** Re-fetch at a new level, keeping current position and history. */
export async function changeLevel(api: ApiClient, view: BoardView,
                                  level: number): Promise<BoardView> {
    const region = await api.region(level);
    const next: BoardView = {
        ...view,
        level,
        cells: paint(region, view.slice),
    };
    if (next.current) markCurrent(next, next.current);
    return next;
}

/** Mark the current position and every cell reachable by one rule move. */
export function markCurrent(view: BoardView, pos: number[],
                            gamma: number[][] = []): void {
    view.current = pos;
    for (const cell of view.cells.values()) {
        cell.current = false;
        cell.reachable = false;
    }
    const here = toCell(view.slice, pos);
    if (here) {
        const cell = view.cells.get(cellKey(here[0], here[1]));
        if (cell) cell.current = true;
    }
    for (const g of gamma) {
        const target = pos.map((x, i) => x - g[i]);
        const projected = toCell(view.slice, target);
        if (!projected) continue;
        const cell = view.cells.get(cellKey(projected[0], projected[1]));
        if (cell) cell.reachable = true; // present in region => on board
    }
}

export function labelAt(view: BoardView, x: number, y: number): Label | null {
    return view.cells.get(cellKey(x, y))?.label ?? null;
}

/** The rule move taking `from` to `target`, if any. */
export function moveFor(meta: Meta, from: number[],
                        target: number[]): number[] | null {
    outer: for (const g of meta.gamma) {
        for (let i = 0; i < g.length; i++) {
            if (from[i] - g[i] !== target[i]) continue outer;
        }
        return g;
    }
    return null;
}
