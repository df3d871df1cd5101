"""Document text, sentence segmentation, reference layout, and sentence lookup.

Everything here is pure and deterministic: the same text and config always
produce byte-identical spans, boxes, and serializations. The layout is a
greedy monospace word wrap — deliberately simple so the headless engine,
the tests, and any frontend can share exact geometry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NoTextError, OutOfRangeError

TERMINATORS = frozenset({".", "!", "?"})

_PARAGRAPH_BREAK = re.compile(r"\n[ \t]*\n")
_WORD = re.compile(r"\S+")


class Terminal(Enum):
    PUNCTUATION = "punctuation"
    LAST_WORD = "last_word"


@dataclass(frozen=True)
class SentenceSpan:
    start: int
    end: int  # exclusive
    terminal: Terminal

    def text_of(self, text: str) -> str:
        return text[self.start : self.end]


@dataclass(frozen=True)
class EditRecord:
    revision: int
    kind: str  # "insert" | "delete"
    start: int
    removed: str
    inserted: str


@dataclass(frozen=True)
class Document:
    text: str
    sentences: tuple[SentenceSpan, ...]
    revision: int = 0
    journal: tuple[EditRecord, ...] = ()

    @staticmethod
    def from_text(text: str) -> "Document":
        return Document(text=text, sentences=tuple(segment_sentences(text)))

    def with_text(self, new_text: str, *, kind: str, start: int,
                  removed: str = "", inserted: str = "") -> "Document":
        """Committed edit: re-segments and bumps the revision by exactly 1."""
        rec = EditRecord(self.revision + 1, kind, start, removed, inserted)
        return Document(
            text=new_text,
            sentences=tuple(segment_sentences(new_text)),
            revision=self.revision + 1,
            journal=self.journal + (rec,),
        )

    def serialize(self) -> str:
        lines = [f"revision\t{self.revision}"]
        for i, s in enumerate(self.sentences):
            lines.append(f"sentence\t{i}\t{s.start}\t{s.end}\t{s.terminal.value}")
        lines.append("text")
        lines.append(self.text)
        return "\n".join(lines)


def segment_sentences(text: str) -> list[SentenceSpan]:
    """Split text into sentence spans.

    A sentence ends at '.', '!' or '?' followed by whitespace or end of
    text, or at the last word of a paragraph (paragraphs are separated by
    blank lines). Abbreviations like "Dr." are split too; that is the
    documented cost of the terminator rule.
    """
    spans: list[SentenceSpan] = []
    if not text:
        return spans

    para_bounds: list[tuple[int, int]] = []
    pos = 0
    for m in _PARAGRAPH_BREAK.finditer(text):
        para_bounds.append((pos, m.start()))
        pos = m.end()
    para_bounds.append((pos, len(text)))

    for p_start, p_end in para_bounds:
        start = None
        i = p_start
        while i < p_end:
            ch = text[i]
            if start is None and not ch.isspace():
                start = i
            if (
                start is not None
                and ch in TERMINATORS
                and (i + 1 >= p_end or text[i + 1].isspace())
            ):
                spans.append(SentenceSpan(start, i + 1, Terminal.PUNCTUATION))
                start = None
            i += 1
        if start is not None:
            end = p_end
            while end > start and text[end - 1].isspace():
                end -= 1
            spans.append(SentenceSpan(start, end, Terminal.LAST_WORD))
    return spans


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float

    def contains(self, px: float, py: float) -> bool:
        return self.x <= px <= self.x + self.w and self.y <= py <= self.y + self.h

    def dist_sq(self, px: float, py: float) -> float:
        dx = max(self.x - px, 0.0, px - (self.x + self.w))
        dy = max(self.y - py, 0.0, py - (self.y + self.h))
        return dx * dx + dy * dy


@dataclass(frozen=True)
class WordBox:
    word_index: int
    sentence_index: int
    rect: Rect
    text: str


@dataclass(frozen=True)
class LayoutCfg:
    char_width_px: float = 5.0
    line_height_px: float = 20.0
    page_width_px: float = 400.0

    def __post_init__(self) -> None:
        if self.char_width_px <= 0:
            raise ValueError("char_width_px must be > 0")
        if self.page_width_px < self.char_width_px:
            raise ValueError("page_width_px must fit at least one character")


@dataclass(frozen=True)
class LayoutMap:
    word_boxes: tuple[WordBox, ...]
    line_height: float
    page_width: float
    char_width: float
    hard_wrapped: tuple[int, ...] = ()  # word indices that were split across lines
    sentence_ends: tuple[int, ...] = ()  # char offset after each sentence

    def serialize(self) -> str:
        head = f"layout\t{self.char_width:g}\t{self.line_height:g}\t{self.page_width:g}"
        rows = [head]
        for b in self.word_boxes:
            r = b.rect
            rows.append(
                f"{b.word_index}\t{b.sentence_index}\t{r.x:g}\t{r.y:g}\t{r.w:g}\t{r.h:g}\t{b.text}"
            )
        if self.hard_wrapped:
            rows.append("hard_wrapped\t" + ",".join(str(i) for i in self.hard_wrapped))
        return "\n".join(rows)


@dataclass(frozen=True)
class CursorPos:
    offset: int
    sentence_index: int
    x: float
    y: float


def document_words(text: str) -> list[tuple[int, int]]:
    """Character spans of whitespace-delimited words, in order."""
    return [(m.start(), m.end()) for m in _WORD.finditer(text)]


def _sentence_of_offset(sentences: Sequence[SentenceSpan], offset: int) -> int:
    for i, s in enumerate(sentences):
        if s.start <= offset < s.end:
            return i
    raise OutOfRangeError(f"offset {offset} outside every sentence span")


def layout_monospace(doc: Document, cfg: LayoutCfg) -> LayoutMap:
    """Greedy word wrap at fixed character width.

    One box per word; a word wider than the page is split into per-line
    segment boxes and its index recorded in ``hard_wrapped``. Paragraph
    breaks force a new line.
    """
    cw, lh, pw = cfg.char_width_px, cfg.line_height_px, cfg.page_width_px
    max_chars = max(1, int(pw // cw))
    boxes: list[WordBox] = []
    hard: list[int] = []

    x = 0.0
    y = 0.0
    prev_end = 0
    for w_idx, (w_start, w_end) in enumerate(document_words(doc.text)):
        word = doc.text[w_start:w_end]
        s_idx = _sentence_of_offset(doc.sentences, w_start)
        if _PARAGRAPH_BREAK.search(doc.text, prev_end, w_start):
            x, y = 0.0, y + lh
        prev_end = w_end

        width = len(word) * cw
        if len(word) > max_chars:
            hard.append(w_idx)
            if x > 0:
                x, y = 0.0, y + lh
            seg_w = 0.0
            for seg_start in range(0, len(word), max_chars):
                seg = word[seg_start : seg_start + max_chars]
                seg_w = len(seg) * cw
                boxes.append(WordBox(w_idx, s_idx, Rect(0.0, y, seg_w, lh), seg))
                if seg_start + max_chars < len(word):
                    y += lh
            x = seg_w + cw
            continue

        if x > 0 and x + width > pw:
            x, y = 0.0, y + lh
        boxes.append(WordBox(w_idx, s_idx, Rect(x, y, width, lh), word))
        x += width + cw  # one-character gap between words

    return LayoutMap(
        word_boxes=tuple(boxes),
        line_height=lh,
        page_width=pw,
        char_width=cw,
        hard_wrapped=tuple(hard),
        sentence_ends=tuple(s.end for s in doc.sentences),
    )


class _Grid:
    """Uniform grid over the word boxes, cell size = one character width."""

    def __init__(self, layout: LayoutMap) -> None:
        self.cell = layout.char_width
        self.cells: dict[tuple[int, int], list[int]] = {}
        for i, b in enumerate(layout.word_boxes):
            r = b.rect
            cx0 = int(r.x // self.cell)
            cx1 = int((r.x + r.w) // self.cell)
            cy0 = int(r.y // self.cell)
            cy1 = int((r.y + r.h) // self.cell)
            for cy in range(cy0, cy1 + 1):
                for cx in range(cx0, cx1 + 1):
                    self.cells.setdefault((cx, cy), []).append(i)
        xs = [gx for gx, _ in self.cells]
        ys = [gy for _, gy in self.cells]
        self.bounds = (min(xs), max(xs), min(ys), max(ys)) if xs else (0, 0, 0, 0)


@lru_cache(maxsize=128)
def _grid_for(layout: LayoutMap) -> _Grid:
    # LayoutMap is immutable, so the probe grid is built once per layout.
    return _Grid(layout)


def nearest_sentence(layout: LayoutMap, point: tuple[float, float]) -> int:
    """Sentence owning the word box closest to ``point``.

    Probes outward from the touch point in square rings one character width
    apart, so no box can fall between consecutive rings. The scan stops at
    the first ring at which the best hit provably beats everything further
    out, which makes the result identical to a brute-force minimum over all
    boxes. Ties go to the lower sentence index.
    """
    if not layout.word_boxes:
        raise NoTextError("layout has no word boxes")

    px, py = point
    grid = _grid_for(layout)
    cell = grid.cell
    cx, cy = int(px // cell), int(py // cell)

    bx0, bx1, by0, by1 = grid.bounds
    # Rings strictly between the probe cell and the occupied bounding box are
    # empty; jump straight to the first ring that can contain a box.
    ring = max(bx0 - cx, cx - bx1, by0 - cy, cy - by1, 0)
    max_ring = max(abs(bx0 - cx), abs(bx1 - cx), abs(by0 - cy), abs(by1 - cy))

    best_sq = float("inf")
    best_sentence = -1
    seen: set[int] = set()
    cells = grid.cells
    boxes = layout.word_boxes

    while ring <= max_ring:
        for key in _ring_cells(cx, cy, ring, grid.bounds):
            for idx in cells.get(key, ()):
                if idx in seen:
                    continue
                seen.add(idx)
                b = boxes[idx]
                d = b.rect.dist_sq(px, py)
                if d < best_sq or (d == best_sq and b.sentence_index < best_sentence):
                    best_sq = d
                    best_sentence = b.sentence_index
        # Any cell on ring r+1 is at least r*cell away from the probe point,
        # so once the best hit is within that bound no further ring can win.
        if best_sentence >= 0 and best_sq <= (ring * cell) ** 2:
            break
        ring += 1
    return best_sentence


def _ring_cells(cx: int, cy: int, r: int,
                bounds: tuple[int, int, int, int]) -> Iterable[tuple[int, int]]:
    """Cells of the square ring at Chebyshev radius ``r``, clipped to the
    occupied bounding box so far-away probes skip empty space."""
    bx0, bx1, by0, by1 = bounds
    if r == 0:
        if bx0 <= cx <= bx1 and by0 <= cy <= by1:
            yield (cx, cy)
        return
    x_lo, x_hi = max(cx - r, bx0), min(cx + r, bx1)
    if by0 <= cy - r <= by1:
        for gx in range(x_lo, x_hi + 1):
            yield (gx, cy - r)
    if by0 <= cy + r <= by1:
        for gx in range(x_lo, x_hi + 1):
            yield (gx, cy + r)
    y_lo, y_hi = max(cy - r + 1, by0), min(cy + r - 1, by1)
    if bx0 <= cx - r <= bx1:
        for gy in range(y_lo, y_hi + 1):
            yield (cx - r, gy)
    if bx0 <= cx + r <= bx1:
        for gy in range(y_lo, y_hi + 1):
            yield (cx + r, gy)


def cursor_from_layout(layout: LayoutMap, s: int) -> CursorPos:
    """Cursor at the end of sentence ``s`` using the layout's own offsets."""
    if s < 0 or s >= len(layout.sentence_ends):
        raise OutOfRangeError(f"sentence index {s} of {len(layout.sentence_ends)}")
    last_box = None
    for b in layout.word_boxes:
        if b.sentence_index == s:
            last_box = b
    if last_box is None:
        raise NoTextError(f"sentence {s} has no word boxes")
    r = last_box.rect
    return CursorPos(offset=layout.sentence_ends[s], sentence_index=s,
                     x=r.x + r.w, y=r.y)


def cursor_for_sentence(doc: Document, layout: LayoutMap, s: int) -> CursorPos:
    """Cursor at the end of sentence ``s``: character offset after its
    terminator (or last word) and the right edge of its last word box."""
    if s < 0 or s >= len(doc.sentences):
        raise OutOfRangeError(f"sentence index {s} of {len(doc.sentences)}")
    cursor = cursor_from_layout(layout, s)
    assert cursor.offset == doc.sentences[s].end
    return cursor
