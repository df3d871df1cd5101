"""Projection of document + bubble track into drawable primitives.

The DisplayModel is the only thing a frontend needs: text runs, rounded
rects, bars, and a cursor, all in document coordinates. Three variants share
the schema: the bubble design, a single length bar, and plain text. Pure
function of its inputs; identical inputs give identical serializations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .bubbles import BubbleTrack
from .engine import BubbleHit
from .textmodel import Document, LayoutMap

VARIANTS = ("bubbles", "lines", "novis")

COLOR_GENERATE = "generate_blue"
COLOR_SENTENCE = "sentence_green"
COLOR_REMOVE = "remove_red"
COLOR_REMOVE_TRANSITIONAL = "remove_red_transitional"
BAR_GENERATION = "generation_green"
BAR_REMOVAL = "removal_red"


@dataclass(frozen=True)
class DisplayModel:
    variant: str
    elements: tuple[dict, ...]

    def serialize(self) -> str:
        return json.dumps({"variant": self.variant,
                           "elements": list(self.elements)},
                          sort_keys=True, separators=(",", ":"))


def render(track: Optional[BubbleTrack], document: Document, layout: LayoutMap,
           variant: str) -> DisplayModel:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    marked = _marked_indices(track)
    hide_words = marked if variant == "novis" else set()
    elements: list[dict] = _text_runs(layout, hide_words)

    if track is not None:
        placed = track.placed_word_list()
        if variant in ("lines", "novis") and placed:
            elements.append({"type": "text_run", "x": track.cursor.x,
                             "y": track.cursor.y, "text": " " + " ".join(placed)})
        if variant == "bubbles":
            elements.extend(_bubble_rects(track, layout))
            elements.extend(_mark_rects(track, layout))
        elif variant == "lines":
            bar = _length_bar(track, layout)
            if bar is not None:
                elements.append(bar)
        elements.append({"type": "cursor", "x": track.cursor.x,
                         "y": track.cursor.y})
    return DisplayModel(variant=variant, elements=tuple(elements))


def _marked_indices(track: Optional[BubbleTrack]) -> set[int]:
    if track is None or track.marked_words == 0:
        return set()
    first = track.words_before_cursor - track.marked_words
    return set(range(first, track.words_before_cursor))


def _text_runs(layout: LayoutMap, hide_words: set[int]) -> list[dict]:
    runs: list[dict] = []
    line: list = []
    for b in layout.word_boxes:
        if b.word_index in hide_words:
            continue
        if line and b.rect.y != line[-1].rect.y:
            runs.append(_run_of(line, layout.char_width))
            line = []
        line.append(b)
    if line:
        runs.append(_run_of(line, layout.char_width))
    return runs


def _run_of(line: list, char_width: float) -> dict:
    text = line[0].text
    for prev, cur in zip(line, line[1:]):
        gap = max(1, round((cur.rect.x - prev.rect.x - prev.rect.w) / char_width))
        text += " " * gap + cur.text
    return {"type": "text_run", "x": line[0].rect.x, "y": line[0].rect.y,
            "text": text}


def _bubble_widths(track: BubbleTrack, layout: LayoutMap) -> list[float]:
    cw = layout.char_width
    widths = []
    for b in track.bubbles:
        if b.kind == "placeholder":
            widths.append(float(b.width))
        elif b.kind == "word":
            widths.append(len(b.text) * cw)
        else:
            widths.append(sum(len(w) * cw for w in b.words)
                          + (len(b.words) - 1) * cw)
    return widths


def _bubble_rects(track: BubbleTrack, layout: LayoutMap) -> list[dict]:
    """Flow the bubbles from the cursor, wrapping at the page edge."""
    rects: list[dict] = []
    cw, lh = layout.char_width, layout.line_height
    x, y = track.cursor.x + cw, track.cursor.y
    for i, (b, w) in enumerate(zip(track.bubbles, _bubble_widths(track, layout))):
        if x > track.cursor.x + cw and x + w > layout.page_width:
            x, y = 0.0, y + lh
        if b.kind == "placeholder":
            el = {"type": "rounded_rect", "bubble": i, "x": x, "y": y, "w": w,
                  "h": lh, "color": COLOR_GENERATE, "blink_ms": b.blink_ms}
        elif b.kind == "word":
            el = {"type": "rounded_rect", "bubble": i, "x": x, "y": y, "w": w,
                  "h": lh, "color": COLOR_GENERATE, "text": b.text}
        else:
            el = {"type": "rounded_rect", "bubble": i, "x": x, "y": y, "w": w,
                  "h": lh, "color": COLOR_SENTENCE, "text": " ".join(b.words)}
        rects.append(el)
        x += w + cw
    return rects


def _mark_rects(track: BubbleTrack, layout: LayoutMap) -> list[dict]:
    rects = []
    newest = track.words_before_cursor - track.marked_words
    for b in layout.word_boxes:
        if b.word_index in _marked_indices(track):
            color = (COLOR_REMOVE_TRANSITIONAL if b.word_index == newest
                     else COLOR_REMOVE)
            rects.append({"type": "rounded_rect", "x": b.rect.x, "y": b.rect.y,
                          "w": b.rect.w, "h": b.rect.h, "color": color,
                          "word_index": b.word_index})
    return rects


def _length_bar(track: BubbleTrack, layout: LayoutMap) -> Optional[dict]:
    if track.marked_words > 0:
        boxes = [b for b in layout.word_boxes
                 if b.word_index in _marked_indices(track)]
        if not boxes:
            return None
        length = sum(b.rect.w for b in boxes) + (len(boxes) - 1) * layout.char_width
        return {"type": "bar", "x": boxes[0].rect.x, "y": boxes[0].rect.y,
                "length": length, "color": BAR_REMOVAL}
    widths = _bubble_widths(track, layout)
    if not widths:
        return None
    length = sum(widths) + (len(widths) - 1) * layout.char_width
    return {"type": "bar", "x": track.cursor.x + layout.char_width,
            "y": track.cursor.y, "length": length, "color": BAR_GENERATION}


def hit_test_bubbles(model: DisplayModel, point: tuple[float, float]
                     ) -> Optional[BubbleHit]:
    """Which filled bubble (word or sentence) is under the point, if any."""
    px, py = point
    for el in model.elements:
        if el.get("type") != "rounded_rect" or "bubble" not in el:
            continue
        if "text" not in el:
            continue  # empty placeholders are not press targets
        if el["x"] <= px <= el["x"] + el["w"] and el["y"] <= py <= el["y"] + el["h"]:
            target = "sentence" if el["color"] == COLOR_SENTENCE else "word"
            return BubbleHit(target=target, bubble_index=el["bubble"])
    return None
