"""Token-level matching of emitted MSVL against patterns with ``...`` gaps."""
from functools import lru_cache

from c2m.msvl.parser import tokenize


def toks(text):
    return [t.text for t in tokenize(text) if t.kind != "eof"]


def pattern(text):
    """Token list where None stands for a gap of any length."""
    out = []
    for k, piece in enumerate(text.split("...")):
        if k:
            out.append(None)
        out.extend(toks(piece))
    return out


def matches(pat, seq):
    @lru_cache(maxsize=None)
    def go(i, j):
        if i == len(pat):
            return j == len(seq)
        if pat[i] is None:
            return any(go(i + 1, k) for k in range(j, len(seq) + 1))
        return j < len(seq) and seq[j] == pat[i] and go(i + 1, j + 1)
    return go(0, 0)


def token_match(pattern_text, emitted):
    return matches(pattern(pattern_text), toks(emitted))
