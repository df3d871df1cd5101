"""Bubble track: placeholders, streaming, retraction, commit/revert."""

from __future__ import annotations

import random

import pytest

from gestext.bubbles import (
    BLINK_MS,
    BubbleTrack,
    commit,
    ingest_chunk,
    new_track,
    resolve_revert,
    retract,
    revert,
    sample_placeholder_width,
    set_target,
    snap_to_one_sentence,
)
from gestext.engine import EngineCommand
from gestext.rng import SplitMix64
from gestext.textmodel import CursorPos, Document

CURSOR = CursorPos(offset=12, sentence_index=0, x=60.0, y=0.0)


def track_with(seed=7, words_before=10, cursor=CURSOR):
    return new_track(cursor, seed, words_before)


def ingest_all(track, text, request_id=None, chunks=None):
    rid = request_id if request_id is not None else track.pending_request
    deltas = chunks if chunks is not None else [text]
    for d in deltas:
        track, _, _ = ingest_chunk(track, rid, d)
    track, _, _ = ingest_chunk(track, rid, "", done=True)
    return track


# --- placeholder sampling ----------------------------------------------------


def test_width_bounds():
    rng = SplitMix64(123)
    widths = {sample_placeholder_width(rng) for _ in range(2000)}
    assert widths == {25, 30, 35, 40, 45, 50}


def test_width_golden_triple_seed_42():
    rng = SplitMix64(42)
    assert [sample_placeholder_width(rng) for _ in range(3)] == [25, 35, 25]


# --- set_target --------------------------------------------------------------


def test_grow_to_five_with_empty_buffer_requests_generation():
    track = track_with()
    track, commands, events = set_target(track, 5)
    assert track.empty_placeholders() == 5
    assert [c.command for c in commands] == [EngineCommand.REQUEST_GENERATION]
    assert track.pending_request == 1
    added = [e for e in events if e["event"] == "placeholder_added"]
    assert len(added) == 5 and all(e["blink_ms"] == BLINK_MS for e in added)


def test_grow_consumes_buffer_before_requesting():
    track = track_with()
    track.buffer = ["alpha", "beta", "gamma", "delta"]
    track.counters.received = 4
    track, commands, _ = set_target(track, 3)
    assert [b.kind for b in track.bubbles] == ["word"] * 3
    assert track.buffer == ["delta"]
    assert commands == []
    assert track.pending_request is None


def test_unchanged_target_is_identity():
    track = track_with()
    track, _, _ = set_target(track, 4)
    before = track.serialize()
    track, commands, events = set_target(track, 4)
    assert commands == [] and events == []
    assert track.serialize() == before


def test_no_second_request_while_pending():
    track = track_with()
    track, commands, _ = set_target(track, 3)
    assert len(commands) == 1
    track, commands, _ = set_target(track, 6)
    assert commands == []  # still pending request 1
    assert track.pending_request == 1


def test_placeholder_widths_drawn_from_track_seed():
    a = track_with(seed=42)
    a, _, _ = set_target(a, 3)
    widths = [b.width for b in a.bubbles]
    assert widths == [25, 35, 25]


# --- ingest ------------------------------------------------------------------


def test_chunks_fill_and_merge_to_sentence():
    track = track_with()
    track, _, _ = set_target(track, 4)
    track = ingest_all(track, None, chunks=["The sk", "y is blue."])
    assert len(track.bubbles) == 1
    b = track.bubbles[0]
    assert b.kind == "sentence"
    assert b.words == ["The", "sky", "is", "blue."]


def test_empty_chunk_is_noop():
    track = track_with()
    track, _, _ = set_target(track, 2)
    before = track.serialize()
    track, commands, events = ingest_chunk(track, track.pending_request, "")
    assert track.serialize() == before
    assert commands == []


def test_stale_chunk_dropped_silently():
    track = track_with()
    track, _, _ = set_target(track, 2)
    before = track.serialize()
    track, _, events = ingest_chunk(track, 999, "hello ")
    assert track.serialize() == before
    assert events[0]["event"] == "stale_chunk_dropped"


def test_overflow_words_enter_buffer():
    track = track_with()
    track, _, _ = set_target(track, 2)
    track = ingest_all(track, "one two three four ")
    assert [b.text for b in track.bubbles] == ["one", "two"]
    assert track.buffer == ["three", "four"]
    assert track.conservation_holds()


def test_bare_punctuation_attaches_to_previous_word():
    track = track_with()
    track, _, _ = set_target(track, 3)
    track = ingest_all(track, None, chunks=["sky is blue", " . "])
    # the fragment "." merged into "blue" and completed the sentence
    assert track.bubbles[0].kind == "sentence"
    assert track.bubbles[0].words == ["sky", "is", "blue."]


def test_opening_punctuation_prefixes_next_word():
    track = track_with()
    track, _, _ = set_target(track, 2)
    track = ingest_all(track, None, chunks=["( ", "quoted) "])
    texts = [b.text for b in track.bubbles if b.kind == "word"]
    assert texts == ["(quoted)"]


def test_rechunking_invariance():
    text = "Alpha beta gamma. Delta epsilon zeta eta theta. Iota kappa"
    rng = random.Random(11)
    finals = set()
    for _ in range(60):
        track = track_with(seed=5)
        track, _, _ = set_target(track, 8)
        cuts = sorted(rng.sample(range(1, len(text)), rng.randint(0, 6)))
        chunks, prev = [], 0
        for c in cuts + [len(text)]:
            chunks.append(text[prev:c])
            prev = c
        track = ingest_all(track, None, chunks=chunks)
        finals.add(track.serialize())
    assert len(finals) == 1


def test_done_rerequests_when_placeholders_remain():
    track = track_with()
    track, _, _ = set_target(track, 6)
    rid = track.pending_request
    track, commands, _ = ingest_chunk(track, rid, "two words. ", done=True)
    assert [c.command for c in commands] == [EngineCommand.REQUEST_GENERATION]
    assert track.pending_request == rid + 1


# --- retract -----------------------------------------------------------------


def word_track(*words, seed=7, words_before=10):
    track = track_with(seed=seed, words_before=words_before)
    for w in words:
        track.counters.received += 1
        track.buffer.append(w)
    if words:
        track, _, _ = set_target(track, len(words))
    return track


def test_retract_removes_trailing_placeholders_first():
    track = word_track("cat")
    track, _, _ = set_target(track, 3)  # adds two placeholders
    buffer_before = list(track.buffer)
    track, _ = retract(track, 2)
    assert [b.kind for b in track.bubbles] == ["word"]
    assert track.bubbles[0].text == "cat"
    assert track.buffer == buffer_before


def test_retract_pushes_word_to_buffer_front():
    track = word_track("cat")
    track, _ = retract(track, 1)
    assert track.bubbles == []
    assert track.buffer[0] == "cat"


def test_retract_splits_sentence_group():
    track = word_track("The", "sky", "is", "blue.")
    assert track.bubbles[0].kind == "sentence"
    track, _ = retract(track, 1)
    assert [b.kind for b in track.bubbles] == ["word"] * 3
    assert [b.text for b in track.bubbles] == ["The", "sky", "is"]
    assert track.buffer[0] == "blue."


def test_full_sentence_retraction_clears_buffer():
    track = word_track("The", "sky", "is", "blue.")
    track, events = retract(track, 4)
    assert track.bubbles == []
    assert track.buffer == []  # regeneration on the next spread, not a replay
    assert any(e["event"] == "buffer_cleared" for e in events)
    assert track.conservation_holds()


def test_retract_past_track_marks_document_words():
    track = track_with(words_before=6)
    track, _ = retract(track, 2)
    assert track.marked_words == 2
    track, events = retract(track, 10)
    assert track.marked_words == 6  # clamped at document start
    assert any(e["event"] == "retract_clamped_at_document_start" for e in events)


def test_retract_starving_inflight_request_cancels_it():
    track = track_with()
    track, _, _ = set_target(track, 3)
    rid = track.pending_request
    track, events = retract(track, 3)
    assert track.pending_request is None
    assert {"event": "request_cancelled", "request_id": rid} in events
    # late chunk now drops
    track, _, events = ingest_chunk(track, rid, "late ")
    assert events[0]["event"] == "stale_chunk_dropped"


def test_pinch_then_spread_restores_same_words():
    track = word_track("alpha", "beta", "gamma")
    track, _ = retract(track, 3)
    assert track.buffer == ["alpha", "beta", "gamma"]
    track, commands, _ = set_target(track, 3)
    assert [b.text for b in track.bubbles] == ["alpha", "beta", "gamma"]
    assert commands == []  # no generation needed


# --- commit / revert ---------------------------------------------------------


def doc_and_cursor(text="Hello world. More text follows here."):
    doc = Document.from_text(text)
    offset = doc.sentences[0].end
    words_before = len([w for w in text[:offset].split()])
    return doc, CursorPos(offset=offset, sentence_index=0, x=60.0, y=0.0), words_before


def test_commit_splices_generated_sentence():
    doc, cursor, wb = doc_and_cursor("Hello world.")
    track = new_track(cursor, 7, wb)
    track, _, _ = set_target(track, 3)
    track = ingest_all(track, "it is done. ")
    doc2, _ = commit(track, doc)
    assert doc2.text == "Hello world. it is done."
    assert doc2.revision == doc.revision + 1
    assert len(doc2.sentences) == 2


def test_commit_mid_document_keeps_following_text():
    doc, cursor, wb = doc_and_cursor()
    track = new_track(cursor, 7, wb)
    track, _, _ = set_target(track, 2)
    track = ingest_all(track, "new stuff ")
    doc2, _ = commit(track, doc)
    assert doc2.text == "Hello world. new stuff More text follows here."


def test_commit_pinch_deletes_marked_words():
    text = "Keep these words. Drop those ones. Tail stays."
    doc = Document.from_text(text)
    offset = doc.sentences[1].end
    words_before = len(text[:offset].split())
    track = new_track(CursorPos(offset, 1, 0.0, 0.0), 7, words_before)
    track, _ = retract(track, 3)  # ones. those Drop
    doc2, _ = commit(track, doc)
    # Oracle: string diff computed by hand
    assert doc2.text == "Keep these words. Tail stays."
    assert doc2.revision == doc.revision + 1


def test_commit_empty_track_is_identity():
    doc, cursor, wb = doc_and_cursor()
    track = new_track(cursor, 7, wb)
    doc2, _ = commit(track, doc)
    assert doc2 is doc


def test_revert_returns_identical_document():
    doc, cursor, wb = doc_and_cursor()
    track = new_track(cursor, 7, wb)
    track, _, _ = set_target(track, 4)
    track = ingest_all(track, "never lands anywhere near ")
    doc2, _ = revert(track, doc)
    assert doc2 is doc
    assert track.conservation_holds()
    assert track.placed_words() == 0 and track.buffer == []


# --- conservation fuzz (small; the big one lives in the acceptance suite) ----


def test_conservation_random_ops():
    rng = random.Random(31337)
    for _ in range(300):
        doc, cursor, wb = doc_and_cursor()
        track = new_track(cursor, rng.randint(0, 2**32), wb)
        for _ in range(rng.randint(1, 15)):
            op = rng.choice(["target", "ingest", "retract", "resolve"])
            if op == "target":
                track, _, _ = set_target(track, rng.randint(-8, 12))
            elif op == "ingest":
                rid = (track.pending_request if rng.random() < 0.8
                       else rng.randint(50, 60))
                words = " ".join(rng.choice(["aa", "bb.", "cc", "!", "dd?"])
                                 for _ in range(rng.randint(0, 4)))
                track, _, _ = ingest_chunk(track, rid, words + rng.choice(["", " "]),
                                           done=rng.random() < 0.3)
            elif op == "retract":
                track, _ = retract(track, rng.randint(1, 5))
            else:
                if rng.random() < 0.5:
                    doc, _ = commit(track, doc)
                else:
                    resolve_revert(track)
            assert track.conservation_holds()
            track.check_structure()
