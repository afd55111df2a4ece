// DOM wiring.  All game knowledge lives on the server; this file only
// renders responses and forwards clicks.

import { ApiClient, Meta } from "./api.js";
import {
    BoardView, cellKey, changeLevel, loadBoard, markCurrent, toPosition,
} from "./board.js";
import { congruenceProbe } from "./congruence.js";
import { humanMove, positionBanner } from "./play.js";

const api = new ApiClient();
let meta: Meta | null = null;
let view: BoardView | null = null;

const $ = (id: string) => document.getElementById(id)!;

function renderBoard(): void {
    if (!view) return;
    const grid = $("board");
    grid.innerHTML = "";
    let maxX = 0, maxY = 0;
    for (const key of view.cells.keys()) {
        const [x, y] = key.split(",").map(Number);
        maxX = Math.max(maxX, x);
        maxY = Math.max(maxY, y);
    }
    grid.style.gridTemplateColumns = `repeat(${maxX + 1}, 22px)`;
    for (let y = maxY; y >= 0; y--) {
        for (let x = 0; x <= maxX; x++) {
            const cell = view.cells.get(cellKey(x, y));
            const div = document.createElement("div");
            div.className = "cell " + (cell ? cell.label : "off");
            if (cell?.current) div.classList.add("current");
            if (cell?.reachable) div.classList.add("reachable");
            div.title = `(${x},${y})${cell ? " " + cell.label : ""}`;
            if (cell) div.onclick = () => onCellClick(x, y);
            grid.appendChild(div);
        }
    }
    $("history").textContent = view.history.join("\n");
}

function showError(err: unknown): void {
    $("status").textContent = err instanceof Error
        ? `error: ${err.message}`
        : "error: the engine could not be reached";
    $("status").className = "error";
}

async function onCellClick(x: number, y: number): Promise<void> {
    if (!meta || !view) return;
    const pos = toPosition(view.slice, x, y);
    try {
        if (!view.current) {
            const { label } = await api.classify(pos);
            markCurrent(view, pos, meta.gamma);
            $("status").textContent =
                `playing from (${pos.join(",")}): ${positionBanner(label)}`;
            $("status").className = "";
        } else {
            const outcome = await humanMove(api, meta, view, pos);
            const { label } = await api.classify(outcome.finalPosition);
            $("status").textContent = `${outcome.banner} — you are at ` +
                `(${outcome.finalPosition.join(",")}), a ${label}-position`;
            $("status").className = "";
        }
        renderBoard();
    } catch (err) {
        showError(err);
    }
}

async function reload(): Promise<void> {
    const level = Number(($("level") as HTMLInputElement).value);
    try {
        meta = await api.meta();
        if (view) {
            view = await changeLevel(api, view, level);
        } else {
            view = await loadBoard(api, level);
        }
        $("status").textContent = meta.d === 2
            ? `d=${meta.d} board at level ${level}`
            : `d=${meta.d} board, 2-d slice at level ${level}`;
        $("status").className = "";
        renderBoard();
    } catch (err) {
        showError(err);
    }
}

async function probe(): Promise<void> {
    const parse = (id: string) =>
        ($(id) as HTMLInputElement).value.split(",").map(Number);
    const panel = await congruenceProbe(api, parse("probe-p"),
                                        parse("probe-q"));
    const target = $("probe-result");
    if (panel.error) {
        target.textContent = `error: ${panel.error}`;
        target.className = "error";
        return;
    }
    target.textContent = panel.text;
    target.className = "";
    if (panel.witnessCell && view) {
        const cell = view.cells.get(
            cellKey(panel.witnessCell[0], panel.witnessCell[1]));
        if (cell) {
            cell.reachable = true;
            renderBoard();
        }
    }
}

export function init(): void {
    $("reload").onclick = () => void reload();
    $("probe").onclick = () => void probe();
    $("reset").onclick = () => {
        if (view && meta) {
            view.current = null;
            view.history = [];
            markCurrent(view, [0, 0], []);
            view.current = null;
            renderBoard();
        }
    };
    void reload();
}

if (typeof document !== "undefined" && document.getElementById("board")) {
    init();
}
