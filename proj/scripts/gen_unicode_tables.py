#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp and tests/data/unicode_cases.tsv.

The C++ normalizer needs four lookup tables derived from the Unicode
character database: full canonical (NFD) decompositions, canonical
combining classes, primary composition pairs, and per-codepoint simple
lowercase mappings, plus the set of word (letter/digit) codepoints as
ranges. Python's unicodedata module carries the full UCD, so we derive
everything from it and freeze the result as plain C++ arrays.

Hangul syllables are excluded from the tables; both decomposition and
composition for them are algorithmic (see unicode.cpp).

Usage: python3 scripts/gen_unicode_tables.py
"""

import random
import sys
import unicodedata
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

HANGUL_BASE = 0xAC00
HANGUL_END = 0xD7A4  # exclusive
MAX_CP = 0x110000


def codepoints():
    for cp in range(MAX_CP):
        if 0xD800 <= cp < 0xE000:
            continue
        yield cp


def build_tables():
    decomp = {}          # cp -> [cp...] full canonical decomposition
    ccc = {}             # cp -> combining class (nonzero only)
    comp_pairs = {}      # (a, b) -> composed
    lower = {}           # cp -> [cp...] per-codepoint lowercase

    for cp in codepoints():
        ch = chr(cp)

        cc = unicodedata.combining(ch)
        if cc:
            ccc[cp] = cc

        if not (HANGUL_BASE <= cp < HANGUL_END):
            nfd = unicodedata.normalize("NFD", ch)
            if nfd != ch:
                decomp[cp] = [ord(c) for c in nfd]

        d = unicodedata.decomposition(ch)
        if d and not d.startswith("<"):
            parts = [int(x, 16) for x in d.split()]
            if len(parts) == 2 and unicodedata.combining(chr(parts[0])) == 0:
                # Composition exclusions fall out of the NFC round-trip test.
                if unicodedata.normalize("NFC", chr(parts[0]) + chr(parts[1])) == ch:
                    comp_pairs[(parts[0], parts[1])] = cp

        lo = ch.lower()
        if lo != ch:
            lower[cp] = [ord(c) for c in lo]

    word_ranges = []
    run_start = None
    prev = None
    for cp in codepoints():
        cat = unicodedata.category(chr(cp))
        is_word = cat[0] in ("L", "N")
        if is_word:
            if run_start is None:
                run_start = cp
            elif prev is not None and cp != prev + 1:
                word_ranges.append((run_start, prev))
                run_start = cp
            prev = cp
        else:
            if run_start is not None:
                word_ranges.append((run_start, prev))
                run_start = None
    if run_start is not None:
        word_ranges.append((run_start, prev))

    return decomp, ccc, comp_pairs, lower, word_ranges


def emit_map(name, mapping, out, expansion, lines):
    entries = []
    for cp in sorted(mapping):
        seq = mapping[cp]
        off = len(expansion)
        expansion.extend(seq)
        entries.append((cp, off, len(seq)))
    lines.append(f"const MapEntry {name}[] = {{")
    for cp, off, ln in entries:
        lines.append(f"    {{0x{cp:X}u, {off}u, {ln}u}},")
    lines.append("};")
    lines.append(f"const std::size_t {name}Count = {len(entries)};")
    lines.append("")


def write_tables(decomp, ccc, comp_pairs, lower, word_ranges):
    lines = []
    lines.append("// Generated by scripts/gen_unicode_tables.py from Python's unicodedata")
    lines.append(f"// (UCD version {unicodedata.unidata_version}). Do not edit by hand.")
    lines.append("")
    lines.append('#include "synthline/unicode_tables.hpp"')
    lines.append("")
    lines.append("namespace synthline::unitab {")
    lines.append("")

    expansion = []
    emit_map("kDecomp", decomp, None, expansion, lines)
    emit_map("kLower", lower, None, expansion, lines)

    lines.append("const char32_t kExpansion[] = {")
    for i in range(0, len(expansion), 12):
        chunk = ", ".join(f"0x{c:X}" for c in expansion[i:i + 12])
        lines.append(f"    {chunk},")
    lines.append("};")
    lines.append("")

    lines.append("const CccEntry kCcc[] = {")
    for cp in sorted(ccc):
        lines.append(f"    {{0x{cp:X}u, {ccc[cp]}}},")
    lines.append("};")
    lines.append(f"const std::size_t kCccCount = {len(ccc)};")
    lines.append("")

    lines.append("const PairEntry kComp[] = {")
    for (a, b) in sorted(comp_pairs):
        key = (a << 32) | b
        lines.append(f"    {{0x{key:X}ull, 0x{comp_pairs[(a, b)]:X}u}},")
    lines.append("};")
    lines.append(f"const std::size_t kCompCount = {len(comp_pairs)};")
    lines.append("")

    lines.append("const Range kWord[] = {")
    for lo, hi in word_ranges:
        lines.append(f"    {{0x{lo:X}u, 0x{hi:X}u}},")
    lines.append("};")
    lines.append(f"const std::size_t kWordCount = {len(word_ranges)};")
    lines.append("")
    lines.append("}  // namespace synthline::unitab")
    lines.append("")

    out = ROOT / "src" / "unicode_tables.cpp"
    out.write_text("\n".join(lines), encoding="utf-8")
    return out


def write_cases():
    rng = random.Random(20240612)
    curated = [
        "",
        "plain ascii text",
        "Café au lait",
        "Café au lait",
        "Å",                      # A + ring -> Å
        "Å",                       # angstrom sign -> Å
        "Ω",                       # ohm sign -> Ω
        "क़",                       # composition exclusion
        "q̣̇",                # reordering: dot below before dot above
        "q̣̇",
        "ḍ̇",
        "à֮̀̕b",  # blocked combinations
        "각",           # Hangul jamo -> 각
        "각",
        "가",                 # LV composition
        "İ",                       # dotted capital I
        "ß",                       # sharp s (lowercase fixed point)
        "ẞ",                       # capital sharp s
        "ΣΣ",                 # capital sigmas
        "ﬁsh",                     # fi ligature (compat: NFC keeps it)
        "x̀́ŷ",
        "ཱཱི",           # Tibetan vowels with odd ccc
        "אָּׁ",     # Hebrew points
        "ｶﾞ",                 # halfwidth katakana (no canonical comp)
        "ガ",                 # katakana + voiced mark -> ガ
    ]
    pools = [
        list(range(0x20, 0x7F)),
        list(range(0xC0, 0x180)),
        list(range(0x300, 0x370)),
        list(range(0x370, 0x400)),
        list(range(0x400, 0x460)),
        list(range(0x1E00, 0x1F00)),
        [0x1100, 0x1101, 0x1161, 0x1168, 0x11A8, 0x11AB, 0xAC00, 0xAC01, 0xD7A3],
        [0x212A, 0x212B, 0x2126, 0x0958, 0x095F, 0xF900, 0xF901, 0x2000, 0x3000],
    ]
    cases = list(curated)
    for _ in range(400):
        n = rng.randint(1, 24)
        cps = []
        for _ in range(n):
            pool = rng.choice(pools)
            cp = rng.choice(pool)
            if 0xD800 <= cp < 0xE000:
                continue
            cps.append(cp)
        cases.append("".join(chr(c) for c in cps))

    out = ROOT / "tests" / "data" / "unicode_cases.tsv"
    with out.open("w", encoding="utf-8") as f:
        f.write("# input_hex\tnfc_hex\tlower_hex (lower = per-codepoint str.lower of the NFC form)\n")
        for s in cases:
            nfc = unicodedata.normalize("NFC", s)
            low = "".join(c.lower() for c in nfc)
            f.write("{}\t{}\t{}\n".format(
                s.encode("utf-8").hex(),
                nfc.encode("utf-8").hex(),
                low.encode("utf-8").hex(),
            ))
    return out


def main():
    decomp, ccc, comp_pairs, lower, word_ranges = build_tables()
    out = write_tables(decomp, ccc, comp_pairs, lower, word_ranges)
    cases = write_cases()
    print(f"wrote {out} (decomp={len(decomp)} ccc={len(ccc)} comp={len(comp_pairs)} "
          f"lower={len(lower)} word_ranges={len(word_ranges)})", file=sys.stderr)
    print(f"wrote {cases}", file=sys.stderr)


if __name__ == "__main__":
    main()
