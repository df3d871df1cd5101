"""Prompt templates and response parsing for the generation service.

The template strings are part of the wire contract: tests pin their hashes,
so edit them only on purpose. (Two long-standing typos, "formated" and
"with the your", are part of the pinned bytes.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

TEMPLATE_EXTEND = "extend"
TEMPLATE_SYNONYM = "synonym"
TEMPLATE_REWRITE = "rewrite_sentence"
TEMPLATE_CUSTOM = "custom_sentence"
TEMPLATE_CHAT = "chat"  # raw passthrough for the chatbot baseline view

SYSTEM_EXTEND = (
    "You are a helpful assistant that can extend one sentence of a given input at a time.\n"
    "You will get a Paragraph and you should write one sentence to extend it.\n"
    "You should only answer with that generated sentence, NOTHING ELSE!"
)

SYSTEM_SYNONYM = (
    "You are a helpful assistant in a react application that can find synonyms for a given word.\n"
    "You will get a word and you should find a synonym for it.\n"
    "Find at least one synonym, but the more the better.\n"
    "If the given word doesn't have any synonyms, you should return 'NO SYNONYM'\n"
    "Your answer will be parsed into an array of words, so make sure to return your answer in this style: 'Synonym1, Synonym2, Synonym3' and so on!\n"
    "You should only answer with the formated synonyms, NOTHING ELSE!"
)

SYSTEM_CUSTOM = (
    "You are an AI tasked with transforming user-provided sentences according to their specific instructions. Please follow the guidelines below for each request:\n"
    " 1. Input Format:\n"
    "    - You will find the string '*sentence:*', this is the original sentence provided by the user!\n"
    "    - You will find the string '*prompt:*', this describes how the user wants the sentence to be modified or altered!\n"
    " 2. Transformation Instructions:\n"
    "    - Analyze the provided Sentence and apply the modifications described in the '*prompt*' section to the best of your ability.\n"
    "    - If the requested transformation cannot be accurately performed, respond with the original sentence in section '*sentence:*' without any modifications.\n"
    "    - Ensure that your response contains only the transformed sentence or the original sentence if transformation is not feasible. Do not include any additional text or information!\n"
    " 3. Answer Format:\n"
    "    - Return only the modified sentence or the original sentence if the modification is not possible. Do not include any extra comments, explanations, or additional content.\n"
    " 4. Example:\n"
    "    - User Request: '*sentence:* I will call you tomorrow. *prompt:* Make it sound more polite.'\n"
    "    - Your Response could be: 'I would be happy to call you tomorrow.'\n"
    "\n"
    "If you have any difficulty performing the requested transformation, simply return the original sentence in section '*sentence*:' as it is."
)

SYSTEM_REWRITE = (
    "You are a helpful assistant in a react application that should rewrite a given sentence.\n"
    "You will get a sentence and you should rewrite it.\n"
    "You should rewrite the sentence to be of this style '{type}'!\n"
    "You should only answer with the your generated sentence, NOTHING ELSE!"
)

USER_SINGLE = "{Sentence}"

USER_CUSTOM = "*sentence*: {sentence}\n*prompt*: {prompt}"

SYSTEM_TEMPLATES: dict[str, str] = {
    TEMPLATE_EXTEND: SYSTEM_EXTEND,
    TEMPLATE_SYNONYM: SYSTEM_SYNONYM,
    TEMPLATE_REWRITE: SYSTEM_REWRITE,
    TEMPLATE_CUSTOM: SYSTEM_CUSTOM,
}

MAX_SYNONYMS = 5
NO_SYNONYM_SENTINEL = "NO SYNONYM"


@dataclass(frozen=True)
class GenerationRequest:
    request_id: int
    template: str
    variables: dict
    max_sentences: int = 1


def render_prompt(req: GenerationRequest) -> tuple[str, str]:
    """Render (system, user) strings for a request; substitution is
    byte-exact, no trimming anywhere."""
    if req.template == TEMPLATE_EXTEND:
        return SYSTEM_EXTEND, req.variables["paragraph"]
    if req.template == TEMPLATE_SYNONYM:
        return SYSTEM_SYNONYM, req.variables["word"]
    if req.template == TEMPLATE_REWRITE:
        system = SYSTEM_REWRITE.replace("{type}", req.variables["type"])
        return system, req.variables["sentence"]
    if req.template == TEMPLATE_CUSTOM:
        user = USER_CUSTOM.replace("{sentence}", req.variables["sentence"])
        user = user.replace("{prompt}", req.variables["prompt"])
        return SYSTEM_CUSTOM, user
    if req.template == TEMPLATE_CHAT:
        return "", req.variables["prompt"]
    raise KeyError(f"unknown template {req.template!r}")


def parse_synonyms(raw: str) -> Optional[list[str]]:
    """Comma-separated synonym list, capped at five; ``None`` means the
    model declared there is no synonym."""
    if raw.strip().casefold() == NO_SYNONYM_SENTINEL.casefold():
        return None
    words = [w.strip() for w in raw.split(",")]
    return [w for w in words if w][:MAX_SYNONYMS]
