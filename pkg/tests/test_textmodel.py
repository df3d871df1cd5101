"""Text model: segmentation, monospace layout, nearest-sentence lookup."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gestext import fixtures
from gestext.errors import NoTextError, OutOfRangeError
from gestext.textmodel import (
    CursorPos,
    Document,
    LayoutCfg,
    LayoutMap,
    Terminal,
    cursor_for_sentence,
    layout_monospace,
    nearest_sentence,
    segment_sentences,
)

WORDS = "alpha bravo charlie delta echo foxtrot golf hotel india juliet kilo lima".split()


def random_text(rng: random.Random, n_words: int) -> str:
    out = []
    for i in range(n_words):
        w = rng.choice(WORDS)
        if rng.random() < 0.2:
            w += rng.choice(".!?")
        out.append(w)
    return " ".join(out)


def brute_force_nearest(layout: LayoutMap, p: tuple[float, float]) -> int:
    """Independent oracle: exact argmin over every word box, lower sentence
    index winning ties."""
    best = None
    for b in layout.word_boxes:
        key = (b.rect.dist_sq(p[0], p[1]), b.sentence_index)
        if best is None or key < best:
            best = key
    assert best is not None
    return best[1]


# --- segmentation -----------------------------------------------------------


def test_two_terminator_sentences():
    spans = segment_sentences("Hello world. How are you?")
    assert len(spans) == 2
    assert spans[0].terminal == Terminal.PUNCTUATION
    assert spans[1].terminal == Terminal.PUNCTUATION
    assert "Hello world."[spans[0].start : spans[0].end] == "Hello world."


def test_empty_text():
    assert segment_sentences("") == []


def test_extend_fixture_has_two_spans():
    text = fixtures.TASK_TEXTS["exp1-extend"]
    spans = segment_sentences(text)
    assert len(spans) == 2
    assert text[spans[1].end - 1] == "."
    assert text.endswith("solar cycle.")


def test_trailing_words_become_last_word_span():
    spans = segment_sentences("One done. still going")
    assert [s.terminal for s in spans] == [Terminal.PUNCTUATION, Terminal.LAST_WORD]
    assert spans[1].end == len("One done. still going")


def test_paragraph_break_closes_span():
    text = "first part\n\nSecond. part"
    spans = segment_sentences(text)
    assert [s.terminal for s in spans] == [
        Terminal.LAST_WORD,
        Terminal.PUNCTUATION,
        Terminal.LAST_WORD,
    ]
    assert text[spans[0].start : spans[0].end] == "first part"


def test_terminator_without_space_does_not_split():
    spans = segment_sentences("See e.g.this one.")
    assert len(spans) == 1


def test_spans_cover_all_nonwhitespace():
    rng = random.Random(7)
    for _ in range(50):
        text = random_text(rng, rng.randint(0, 40))
        spans = segment_sentences(text)
        covered = set()
        for s in spans:
            covered.update(range(s.start, s.end))
        for i, ch in enumerate(text):
            if not ch.isspace():
                assert i in covered, (text, i)
        # ordered + non-overlapping
        for a, b in zip(spans, spans[1:]):
            assert a.end <= b.start


@given(st.lists(st.sampled_from(WORDS), min_size=1, max_size=30), st.randoms())
@settings(max_examples=100)
def test_segmentation_idempotent_on_span_texts(words, rnd):
    text = " ".join(
        w + (rnd.choice(".!?") if rnd.random() < 0.3 else "") for w in words
    )
    spans = segment_sentences(text)
    span_texts = [s.text_of(text) for s in spans]
    rejoined = " ".join(span_texts)
    again = [s.text_of(rejoined) for s in segment_sentences(rejoined)]
    assert again == span_texts


# --- layout -----------------------------------------------------------------


def test_single_word_box_width():
    doc = Document.from_text("cat")
    layout = layout_monospace(doc, LayoutCfg(char_width_px=5, page_width_px=100))
    assert len(layout.word_boxes) == 1
    assert layout.word_boxes[0].rect.w == 15


def test_greedy_wrap_limits_line_length():
    text = " ".join(["abcd"] * 16)  # 79 chars
    doc = Document.from_text(text)
    layout = layout_monospace(
        doc, LayoutCfg(char_width_px=5, page_width_px=200, line_height_px=10)
    )
    for b in layout.word_boxes:
        assert b.rect.x + b.rect.w <= 200


def test_layout_coverage_every_char_in_exactly_one_box():
    rng = random.Random(21)
    cfg = LayoutCfg(char_width_px=5, page_width_px=120, line_height_px=12)
    for _ in range(50):
        doc = Document.from_text(random_text(rng, rng.randint(1, 30)))
        layout = layout_monospace(doc, cfg)
        # Brute force: probe the centre of every character cell of every box
        # against all boxes; it must fall inside exactly one.
        for b in layout.word_boxes:
            for k in range(len(b.text)):
                px = b.rect.x + (k + 0.5) * cfg.char_width_px
                py = b.rect.y + b.rect.h / 2
                hits = [c for c in layout.word_boxes if c.rect.contains(px, py)]
                assert len(hits) == 1
        total_chars = sum(len(b.text) for b in layout.word_boxes)
        assert total_chars == sum(1 for ch in doc.text if not ch.isspace())


def test_layout_serialization_deterministic():
    doc = Document.from_text("The quick brown fox jumps. Over the lazy dog.")
    cfg = LayoutCfg(char_width_px=5, page_width_px=100)
    a = layout_monospace(doc, cfg).serialize()
    b = layout_monospace(doc, cfg).serialize()
    assert a == b


def test_hard_wrap_flags_long_word():
    doc = Document.from_text("ab superlongunbreakableword cd")
    layout = layout_monospace(doc, LayoutCfg(char_width_px=5, page_width_px=50))
    assert layout.hard_wrapped == (1,)
    segs = [b for b in layout.word_boxes if b.word_index == 1]
    assert len(segs) > 1
    assert sum(len(b.text) for b in segs) == len("superlongunbreakableword")


def test_layout_cfg_validation():
    with pytest.raises(ValueError):
        LayoutCfg(char_width_px=0)
    with pytest.raises(ValueError):
        LayoutCfg(char_width_px=10, page_width_px=5)


# --- nearest sentence -------------------------------------------------------


def make_layout(text: str, **cfg) -> tuple[Document, LayoutMap]:
    doc = Document.from_text(text)
    defaults = dict(char_width_px=5, page_width_px=150, line_height_px=14)
    defaults.update(cfg)
    return doc, layout_monospace(doc, LayoutCfg(**defaults))


def test_point_inside_box_wins():
    _, layout = make_layout("One one. Two two. Three three.")
    target = [b for b in layout.word_boxes if b.sentence_index == 2][0]
    p = (target.rect.x + 1, target.rect.y + 1)
    assert nearest_sentence(layout, p) == 2


def test_margin_point_matches_brute_force():
    _, layout = make_layout(" ".join(f"word{i}." for i in range(30)))
    p = (200.0, 37.0)  # off to the right, between lines
    assert nearest_sentence(layout, p) == brute_force_nearest(layout, p)


def test_exact_tie_lower_sentence_index():
    # Two one-word sentences on one line; probe equidistant between them.
    _, layout = make_layout("aa. bb.", page_width_px=500)
    b0, b1 = layout.word_boxes
    mid_x = (b0.rect.x + b0.rect.w + b1.rect.x) / 2
    p = (mid_x, b0.rect.y + 3)
    assert b0.rect.dist_sq(*p) == b1.rect.dist_sq(*p)
    assert nearest_sentence(layout, p) == 0


def test_empty_layout_raises():
    _, layout = make_layout("x")
    empty = LayoutMap((), layout.line_height, layout.page_width, layout.char_width)
    with pytest.raises(NoTextError):
        nearest_sentence(empty, (0, 0))


def test_randomized_equivalence_with_brute_force():
    rng = random.Random(99)
    for _ in range(40):
        text = random_text(rng, rng.randint(1, 60))
        _, layout = make_layout(text, page_width_px=rng.choice([80, 150, 300]))
        if not layout.word_boxes:
            continue
        for _ in range(20):
            p = (rng.uniform(-50, 400), rng.uniform(-50, 300))
            assert nearest_sentence(layout, p) == brute_force_nearest(layout, p)


# --- cursor -----------------------------------------------------------------


def test_cursor_after_terminator():
    doc, layout = make_layout("Hello world. Next one.")
    c = cursor_for_sentence(doc, layout, 0)
    assert c.offset == len("Hello world.")
    last = [b for b in layout.word_boxes if b.sentence_index == 0][-1]
    assert c.x == last.rect.x + last.rect.w


def test_cursor_after_last_word_when_unterminated():
    doc, layout = make_layout("Complete one. trailing words here")
    c = cursor_for_sentence(doc, layout, 1)
    assert c.offset == len("Complete one. trailing words here")


def test_cursor_invalid_index():
    doc, layout = make_layout("One.")
    with pytest.raises(OutOfRangeError):
        cursor_for_sentence(doc, layout, 5)


def test_cursor_offset_tracks_insertion():
    base = "First bit. Second bit."
    doc, layout = make_layout(base)
    before = cursor_for_sentence(doc, layout, 0)
    inserted = " Brand new words."
    doc2 = doc.with_text(
        base[: before.offset] + inserted + base[before.offset :],
        kind="insert",
        start=before.offset,
        inserted=inserted,
    )
    layout2 = layout_monospace(doc2, LayoutCfg(char_width_px=5, page_width_px=150, line_height_px=14))
    # Oracle: re-segment and find the sentence ending at old offset + insert len
    after = cursor_for_sentence(doc2, layout2, 1)
    assert after.offset == before.offset + len(inserted)
    assert doc2.revision == doc.revision + 1


def test_document_revision_and_journal():
    doc = Document.from_text("Hello there.")
    doc2 = doc.with_text("Hello there. More.", kind="insert", start=12, inserted=" More.")
    assert doc2.revision == 1
    assert doc2.journal[-1].inserted == " More."
    assert doc.revision == 0  # original untouched
