"""Bubble track: placeholders, streamed words, sentence merging, retraction.

The track is the bookkeeping between "how far the fingers have moved" and
"what text actually exists": a forward list of bubbles anchored at the
cursor, a FIFO buffer of generated-but-unplaced words, and a count of
committed document words marked for removal.

Structural invariant kept by every operation: the bubble list is always
zero or more complete sentence groups, then the words of one incomplete
sentence, then empty placeholders. Words are conserved: every word received
from the stream is in a bubble, in the buffer, or accounted for in the
discard counter.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace
from typing import Optional

from .engine import EngineCommand
from .rng import SplitMix64
from .textmodel import TERMINATORS, CursorPos, Document, document_words

logger = logging.getLogger(__name__)

PLACEHOLDER_MIN_CHARS = 5
PLACEHOLDER_MAX_CHARS = 10
PLACEHOLDER_PX_PER_CHAR = 5
BLINK_MS = 150

# Characters that open a quotation or bracket; a bare fragment of these
# prefixes the next word, everything else appends to the previous one.
_OPENING = set("([{«„¿¡")


def sample_placeholder_width(rng: SplitMix64) -> int:
    """Simulated word width: 5-10 characters at five pixels per character."""
    return PLACEHOLDER_PX_PER_CHAR * rng.uniform_int(
        PLACEHOLDER_MIN_CHARS, PLACEHOLDER_MAX_CHARS)


@dataclass
class Bubble:
    kind: str  # "placeholder" | "word" | "sentence"
    width: int = 0  # sampled width, placeholders only
    text: str = ""  # word bubbles only
    words: list[str] = field(default_factory=list)  # sentence groups only
    blink_ms: int = 0  # appearance animation, set once at creation

    def word_count(self) -> int:
        if self.kind == "sentence":
            return len(self.words)
        return 1 if self.kind == "word" else 0

    def to_json(self) -> dict:
        if self.kind == "placeholder":
            return {"kind": "placeholder", "width": self.width,
                    "blink_ms": self.blink_ms}
        if self.kind == "word":
            return {"kind": "word", "text": self.text}
        return {"kind": "sentence", "words": list(self.words)}


@dataclass
class Counters:
    received: int = 0
    discarded: int = 0  # left the track via commit, revert, or sentence-clear

    def to_json(self) -> dict:
        return {"received": self.received, "discarded": self.discarded}


@dataclass
class BubbleTrack:
    cursor: CursorPos
    rng_seed: int
    words_before_cursor: int
    bubbles: list[Bubble] = field(default_factory=list)
    buffer: list[str] = field(default_factory=list)  # front = index 0
    marked_words: int = 0
    pending_request: Optional[int] = None
    next_request_id: int = 1
    partial: str = ""  # accumulator for an incomplete streamed word
    pending_prefix: str = ""  # leading punctuation awaiting its word
    counters: Counters = field(default_factory=Counters)
    snap_active: bool = False
    # Tail words that belonged to a dissolved sentence group; when they are
    # all retracted the whole sentence is gone and the buffer is cleared so a
    # later spread regenerates instead of replaying it.
    dissolving_run: Optional[int] = None
    rng: SplitMix64 = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.rng is None:
            self.rng = SplitMix64(self.rng_seed)

    # -- accounting ---------------------------------------------------------

    def placed_words(self) -> int:
        return sum(b.word_count() for b in self.bubbles)

    def empty_placeholders(self) -> int:
        return sum(1 for b in self.bubbles if b.kind == "placeholder")

    def generation_units(self) -> int:
        return self.placed_words() + self.empty_placeholders()

    def signed_units(self) -> int:
        return self.generation_units() - self.marked_words

    def conservation_holds(self) -> bool:
        return self.counters.received == (
            self.placed_words() + len(self.buffer) + self.counters.discarded)

    def placed_word_list(self) -> list[str]:
        out: list[str] = []
        for b in self.bubbles:
            if b.kind == "word":
                out.append(b.text)
            elif b.kind == "sentence":
                out.extend(b.words)
        return out

    def serialize(self) -> str:
        state = {
            "cursor_offset": self.cursor.offset,
            "cursor_sentence": self.cursor.sentence_index,
            "rng_seed": self.rng_seed,
            "bubbles": [b.to_json() for b in self.bubbles],
            "buffer": list(self.buffer),
            "marked_words": self.marked_words,
            "pending_request": self.pending_request,
            "partial": self.partial,
            "counters": self.counters.to_json(),
        }
        return json.dumps(state, sort_keys=True, separators=(",", ":"))

    def check_structure(self) -> None:
        """Sentence groups, then plain words, then placeholders; marks only
        when the generation side is empty."""
        stage = 0
        order = {"sentence": 0, "word": 1, "placeholder": 2}
        for b in self.bubbles:
            assert order[b.kind] >= stage, [x.kind for x in self.bubbles]
            stage = order[b.kind]
        if self.marked_words > 0:
            assert not self.bubbles, "marks require an empty generation side"


def new_track(cursor: CursorPos, seed: int, words_before_cursor: int,
              first_request_id: int = 1) -> BubbleTrack:
    return BubbleTrack(cursor=cursor, rng_seed=seed,
                       words_before_cursor=words_before_cursor,
                       next_request_id=first_request_id)


# -- target adjustment --------------------------------------------------------


def set_target(track: BubbleTrack, target_words: int
               ) -> tuple[BubbleTrack, list[EngineCommand], list[dict]]:
    """Grow or shrink the track to a signed word target.

    Positive growth first unmarks any removal marks, then appends units:
    straight from the buffer when it has words, otherwise as a blinking
    placeholder. A generation request is emitted only when empty
    placeholders outnumber buffered words and nothing is in flight.
    """
    current = track.signed_units()
    if target_words == current:
        return track, [], []

    events: list[dict] = []
    commands: list[EngineCommand] = []
    if target_words > current:
        for _ in range(target_words - current):
            if track.marked_words > 0:
                track.marked_words -= 1
                events.append({"event": "word_unmarked",
                               "remaining_marks": track.marked_words})
            else:
                _append_unit(track, events)
        commands.extend(_maybe_request(track, events))
    else:
        retract_events = _retract_units(track, current - target_words)
        events.extend(retract_events)
    return track, commands, events


def _append_unit(track: BubbleTrack, events: list[dict]) -> None:
    track.dissolving_run = None
    if track.buffer:
        word = track.buffer.pop(0)
        _place_word(track, word, events, appended=True)
    else:
        width = sample_placeholder_width(track.rng)
        track.bubbles.append(Bubble(kind="placeholder", width=width,
                                    blink_ms=BLINK_MS))
        events.append({"event": "placeholder_added", "width": width,
                       "blink_ms": BLINK_MS})


def _maybe_request(track: BubbleTrack, events: list[dict]) -> list[EngineCommand]:
    if (track.empty_placeholders() > len(track.buffer)
            and track.pending_request is None):
        rid = track.next_request_id
        track.next_request_id += 1
        track.pending_request = rid
        events.append({"event": "request_issued", "request_id": rid})
        return [EngineCommand(EngineCommand.REQUEST_GENERATION,
                              {"request_id": rid})]
    return []


# -- streamed chunks ----------------------------------------------------------


def ingest_chunk(track: BubbleTrack, request_id: int, delta: str,
                 done: bool = False) -> tuple[BubbleTrack, list[EngineCommand], list[dict]]:
    """Fold one streamed delta into the track.

    Whitespace completes words; bare punctuation fragments attach to the
    neighbouring word; a terminator-ending word merges the open word run
    into a sentence group. Chunks for anything but the pending request are
    dropped (logged), so cancelled streams die quietly.
    """
    if track.pending_request != request_id:
        logger.info("dropping chunk for stale request %s (pending %s)",
                    request_id, track.pending_request)
        return track, [], [{"event": "stale_chunk_dropped", "request_id": request_id}]

    events: list[dict] = []
    commands: list[EngineCommand] = []
    track.partial += delta

    # Words are complete only at whitespace (or stream end), never at chunk
    # boundaries, so any re-chunking of the same text lands identically.
    parts = track.partial.split()
    if parts and not track.partial[-1].isspace():
        track.partial = parts.pop()
    else:
        track.partial = ""
    for token in parts:
        _ingest_token(track, token, events)

    if done:
        leftover = track.partial.strip()
        track.partial = ""
        if leftover:
            _ingest_token(track, leftover, events)
        track.pending_request = None
        events.append({"event": "stream_done", "request_id": request_id})
        if track.snap_active and not _snap_satisfied(track):
            # Snap still owes a full sentence; chain another request.
            rid = track.next_request_id
            track.next_request_id += 1
            track.pending_request = rid
            events.append({"event": "request_issued", "request_id": rid})
            commands.append(EngineCommand(EngineCommand.REQUEST_GENERATION,
                                          {"request_id": rid}))
        else:
            commands.extend(_maybe_request(track, events))
    return track, commands, events


def _snap_satisfied(track: BubbleTrack) -> bool:
    return any(b.kind == "sentence" for b in track.bubbles)


def _ingest_token(track: BubbleTrack, token: str, events: list[dict]) -> None:
    if track.pending_prefix:
        token = track.pending_prefix + token
        track.pending_prefix = ""
    if not any(ch.isalnum() for ch in token):
        # Bare punctuation: glue onto a neighbour, never its own bubble.
        if token and token[0] in _OPENING:
            track.pending_prefix = token
            return
        if _attach_trailing(track, token, events):
            return
        track.pending_prefix = token
        return
    track.counters.received += 1
    _route_word(track, token, events)


def _attach_trailing(track: BubbleTrack, fragment: str, events: list[dict]) -> bool:
    if track.buffer:
        track.buffer[-1] += fragment
        return True
    for b in reversed(track.bubbles):
        if b.kind == "word":
            b.text += fragment
            events.append({"event": "word_amended", "text": b.text})
            if b.text[-1] in TERMINATORS:
                _merge_sentence(track, events)
            return True
        if b.kind == "sentence":
            b.words[-1] += fragment
            return True
        # keep scanning past empty placeholders
    return False


def _route_word(track: BubbleTrack, word: str, events: list[dict]) -> None:
    if track.snap_active:
        # Snap mode wants one whole sentence regardless of placeholder count.
        _place_word(track, word, events, appended=track.empty_placeholders() == 0)
        if _snap_satisfied(track):
            _finish_snap(track, events)
        return
    if track.empty_placeholders() > 0:
        _place_word(track, word, events)
    else:
        track.buffer.append(word)
        events.append({"event": "word_buffered", "text": word})


def _place_word(track: BubbleTrack, word: str, events: list[dict],
                appended: bool = False) -> None:
    track.dissolving_run = None
    if appended or track.empty_placeholders() == 0:
        track.bubbles.append(Bubble(kind="word", text=word))
        events.append({"event": "word_appended", "text": word})
    else:
        for i, b in enumerate(track.bubbles):
            if b.kind == "placeholder":
                track.bubbles[i] = Bubble(kind="word", text=word)
                events.append({"event": "word_filled", "index": i, "text": word})
                break
    if word[-1] in TERMINATORS:
        _merge_sentence(track, events)


def _merge_sentence(track: BubbleTrack, events: list[dict]) -> None:
    """Collapse the open word run into one green sentence group."""
    start = 0
    for i, b in enumerate(track.bubbles):
        if b.kind == "sentence":
            start = i + 1
    run: list[str] = []
    end = start
    for b in track.bubbles[start:]:
        if b.kind != "word":
            break
        run.append(b.text)
        end += 1
    if not run or run[-1][-1] not in TERMINATORS:
        return
    track.bubbles[start:end] = [Bubble(kind="sentence", words=run)]
    events.append({"event": "sentence_merged", "words": list(run)})


def _finish_snap(track: BubbleTrack, events: list[dict]) -> None:
    track.bubbles = [b for b in track.bubbles if b.kind != "placeholder"]
    track.snap_active = False
    if track.pending_request is not None:
        events.append({"event": "request_cancelled",
                       "request_id": track.pending_request})
        track.pending_request = None
    events.append({"event": "snap_completed",
                   "placed_words": track.placed_words()})


def snap_to_one_sentence(track: BubbleTrack
                         ) -> tuple[BubbleTrack, list[EngineCommand], list[dict]]:
    """Switch the track into sentence-snap mode: place whatever the buffer
    holds, then stream until the first terminator and trim the rest."""
    events: list[dict] = [{"event": "snap_requested"}]
    commands: list[EngineCommand] = []
    track.snap_active = True
    while track.buffer and not _snap_satisfied(track):
        word = track.buffer.pop(0)
        _place_word(track, word, events,
                    appended=track.empty_placeholders() == 0)
    if _snap_satisfied(track):
        _finish_snap(track, events)
        return track, commands, events
    if track.pending_request is None:
        rid = track.next_request_id
        track.next_request_id += 1
        track.pending_request = rid
        events.append({"event": "request_issued", "request_id": rid})
        commands.append(EngineCommand(EngineCommand.REQUEST_GENERATION,
                                      {"request_id": rid}))
    return track, commands, events


# -- retraction ---------------------------------------------------------------


def retract(track: BubbleTrack, n: int) -> tuple[BubbleTrack, list[dict]]:
    """Remove ``n`` word units, rightmost first."""
    if n < 1:
        raise ValueError("retract needs n >= 1")
    events = _retract_units(track, n)
    return track, events


def _retract_units(track: BubbleTrack, n: int) -> list[dict]:
    events: list[dict] = []
    for _ in range(n):
        if track.bubbles:
            _retract_one(track, events)
        elif track.marked_words < track.words_before_cursor:
            track.marked_words += 1
            events.append({"event": "word_marked",
                           "word_index": track.words_before_cursor - track.marked_words,
                           "transitional": True})
        else:
            events.append({"event": "retract_clamped_at_document_start"})
    if (track.pending_request is not None
            and track.empty_placeholders() == 0
            and not track.snap_active):
        events.append({"event": "request_cancelled",
                       "request_id": track.pending_request})
        track.pending_request = None
    return events


def _retract_one(track: BubbleTrack, events: list[dict]) -> None:
    last = track.bubbles[-1]
    if last.kind == "placeholder":
        track.bubbles.pop()
        events.append({"event": "placeholder_removed"})
        return
    if last.kind == "word":
        track.bubbles.pop()
        track.buffer.insert(0, last.text)
        events.append({"event": "word_pushed_back", "text": last.text})
        if track.dissolving_run is not None:
            track.dissolving_run -= 1
            if track.dissolving_run <= 0:
                _clear_buffer_for_retracted_sentence(track, events)
        return
    # Sentence group: split off the last word, the rest turn blue again.
    word = last.words[-1]
    remaining = last.words[:-1]
    track.bubbles.pop()
    track.bubbles.extend(Bubble(kind="word", text=w) for w in remaining)
    track.buffer.insert(0, word)
    events.append({"event": "sentence_dissolved", "pushed_back": word,
                   "remaining_words": len(remaining)})
    track.dissolving_run = len(remaining)
    if track.dissolving_run == 0:
        _clear_buffer_for_retracted_sentence(track, events)


def _clear_buffer_for_retracted_sentence(track: BubbleTrack,
                                         events: list[dict]) -> None:
    track.dissolving_run = None
    if track.buffer:
        track.counters.discarded += len(track.buffer)
        events.append({"event": "buffer_cleared", "discarded": len(track.buffer)})
        track.buffer.clear()


# -- resolution ---------------------------------------------------------------


def resolve_commit(track: BubbleTrack) -> tuple[list[str], int, list[dict]]:
    """Close the track for an accepted gesture: returns (words to splice,
    marked word count to delete) and retires everything else."""
    words = track.placed_word_list()
    events = [{"event": "commit", "placed": len(words),
               "deleted_marks": track.marked_words}]
    retired = len(words) + len(track.buffer)
    track.counters.discarded += retired
    dropped_request = track.pending_request
    track.pending_request = None
    if dropped_request is not None:
        events.append({"event": "request_cancelled", "request_id": dropped_request})
    marked = track.marked_words
    track.bubbles.clear()
    track.buffer.clear()
    track.marked_words = 0
    return words, marked, events


def commit(track: BubbleTrack, document: Document) -> tuple[Document, list[dict]]:
    """Apply the accepted gesture to the document.

    A spread splices the placed words at the cursor, single-spaced; a pinch
    deletes the marked words and normalizes the join to one space. An empty
    track commits to the unchanged document (no revision bump).
    """
    offset = track.cursor.offset
    words, marked, events = resolve_commit(track)
    if marked > 0:
        spans = [s for s in document_words(document.text) if s[1] <= offset]
        doomed = spans[-marked:]
        start, end = doomed[0][0], doomed[-1][1]
        before, after = document.text[:start], document.text[end:]
        if before.strip() and after.strip():
            new_text = before.rstrip() + " " + after.lstrip()
        else:
            new_text = (before.rstrip() + after.lstrip()).strip()
        return document.with_text(new_text, kind="delete", start=start,
                                  removed=document.text[start:end]), events
    if words:
        joined = " ".join(words)
        before, after = document.text[:offset], document.text[offset:]
        lead = " " if before and not before[-1].isspace() else ""
        tail = " " if after and not after[0].isspace() else ""
        new_text = before + lead + joined + tail + after
        return document.with_text(new_text, kind="insert", start=offset,
                                  inserted=lead + joined + tail), events
    return document, events


def revert(track: BubbleTrack, document: Document) -> tuple[Document, list[dict]]:
    """Discard the gesture. The document was never mutated, so this returns
    it as-is (byte-identical) and retires the track's words."""
    events = resolve_revert(track)
    return document, events


def resolve_revert(track: BubbleTrack) -> list[dict]:
    """Close the track for a rejected gesture: every received word is
    retired, nothing reaches the document."""
    retired = track.placed_words() + len(track.buffer)
    track.counters.discarded += retired
    events = [{"event": "revert", "retired": retired}]
    if track.pending_request is not None:
        events.append({"event": "request_cancelled",
                       "request_id": track.pending_request})
        track.pending_request = None
    track.bubbles.clear()
    track.buffer.clear()
    track.marked_words = 0
    return events
