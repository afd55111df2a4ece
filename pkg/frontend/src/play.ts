// Play-session flow: validate the human's target with the server, apply
// the engine reply, and keep a readable transcript.

import { ApiClient, Meta, PlayResult } from "./api.js";
import { BoardView, markCurrent, moveFor } from "./board.js";

export interface PlyOutcome {
    result: PlayResult;
    banner: string;
    finalPosition: number[];
}

const fmt = (p: number[]) => `(${p.join(",")})`;

/**
 * One ply: the human moves from the view's current position to `target`.
 * The server decides legality and answers with the engine reply; the view
 * is updated in place.
 */
export async function humanMove(api: ApiClient, meta: Meta, view: BoardView,
                                target: number[]): Promise<PlyOutcome> {
    const from = view.current;
    if (!from) throw new Error("no current position selected");
    const move = moveFor(meta, from, target);
    if (!move) throw new Error(`${fmt(target)} is not one move away`);
    const result = await api.play(from, move);
    view.history.push(`you: ${fmt(from)} -> ${fmt(result.after_human)}`);

    let banner: string;
    let finalPosition = result.after_human;
    if (result.terminal && result.engine_move === null) {
        banner = "game over: the engine has no legal move";
    } else if (result.engine_move !== null) {
        finalPosition = result.after_engine!;
        view.history.push(
            `engine: ${fmt(result.after_human)} -> ${fmt(finalPosition)}`);
        banner = result.terminal
            ? "game over: you have no legal move"
            : `engine played ${fmt(result.engine_move)}`;
    } else {
        banner = "engine has no winning move from here";
    }
    markCurrent(view, finalPosition, meta.gamma);
    return { result, banner, finalPosition };
}

/** Banner shown before the human moves, from the server's label. */
export function positionBanner(label: string): string {
    return label === "P"
        ? "no winning move exists for you"
        : "a winning move exists — find it";
}
