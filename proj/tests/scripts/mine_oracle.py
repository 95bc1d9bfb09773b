"""Brute-force stem counter used to produce the golden miner report.

Written from the pattern definition alone: a postposition (J*) that closes a
word with a nonempty host, any number of adverb-only words (MAG), then a word
opening with a stem (XR or N*), 하 tagged XSV or V*, and at least one ending (E*).
A word used as the verb of one occurrence cannot host the next. The suffix is
the verb word minus the stem and minus whatever follows the endings. A stem is
standalone wherever an N* token is not immediately followed by 하/XSV|V*.

    python3 mine_oracle.py corpus.tsv [k] > report.tsv
"""
import sys
from collections import Counter, defaultdict

JAMO_FINAL = {"ㄴ": 4, "ㄹ": 8, "ㅁ": 16, "ㅂ": 17}


def read(path):
    sents, cur, text = [], [], None
    for line in open(path, encoding="utf-8"):
        line = line.rstrip("\n")
        if not line:
            if cur:
                sents.append((cur, text))
            cur, text = [], None
        elif line.startswith("# text = "):
            text = line[len("# text = "):].split(" ")
        elif line.startswith("#"):
            continue
        else:
            s, t, e = line.split("\t")
            cur.append((s, t, int(e)))
    if cur:
        sents.append((cur, text))
    return sents


def glue(parts):
    out = ""
    for p in parts:
        if p and p[0] in JAMO_FINAL and out and 0xAC00 <= ord(out[-1]) <= 0xD7A3 \
                and (ord(out[-1]) - 0xAC00) % 28 == 0:
            out = out[:-1] + chr(ord(out[-1]) + JAMO_FINAL[p[0]]) + p[1:]
        else:
            out += p
    return out


def words_of(tokens, text):
    n = max(e for _, _, e in tokens) + 1
    words = [[] for _ in range(n)]
    for s, t, e in tokens:
        words[e].append((s, t))
    texts = text if text else [glue([s for s, _ in w]) for w in words]
    return words, texts


def occurrences(tokens, text):
    words, texts = words_of(tokens, text)
    found = []
    blocked_until = 0
    for h, host in enumerate(words):
        if h < blocked_until or len(host) < 2 or not host[-1][1].startswith("J"):
            continue
        v = h + 1
        while v < len(words) and words[v] and all(t.startswith("MAG") for _, t in words[v]):
            v += 1
        if v >= len(words):
            continue
        w = words[v]
        if len(w) < 3 or not (w[0][1].startswith("XR") or w[0][1].startswith("N")):
            continue
        if w[1][0] != "하" or not (w[1][1].startswith("XSV") or w[1][1].startswith("V")):
            continue
        end = 2
        while end < len(w) and w[end][1].startswith("E"):
            end += 1
        if end == 2:
            continue
        stem = w[0][0]
        rest = glue([s for s, _ in w[end:]])
        word = texts[v]
        if rest:
            assert word.endswith(rest)
            word = word[: len(word) - len(rest)]
        found.append((stem, host[-1][0], word[len(stem):]))
        blocked_until = v + 1
    return found


def main():
    sents = read(sys.argv[1])
    k = int(sys.argv[2]) if len(sys.argv) > 2 else 300
    total = Counter()
    adps, sufs, triples = defaultdict(set), defaultdict(set), defaultdict(set)
    bare = Counter()
    for tokens, text in sents:
        for stem, adp, suf in occurrences(tokens, text):
            total[stem] += 1
            adps[stem].add(adp)
            sufs[stem].add(suf)
            triples[stem].add((adp, suf))
        for i, (s, t, _) in enumerate(tokens):
            if not t.startswith("N"):
                continue
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            if not (nxt and nxt[0] == "하" and (nxt[1].startswith("XSV") or nxt[1].startswith("V"))):
                bare[s] += 1
    order = sorted(total, key=lambda s: (-total[s], [ord(c) for c in s]))[:k]
    print("stem\ttotal\tdistinct_adps\tdistinct_suffixes\tdistinct_triples\tstandalone\tboundness")
    for s in order:
        b = total[s] / (total[s] + bare[s])
        print(f"{s}\t{total[s]}\t{len(adps[s])}\t{len(sufs[s])}\t{len(triples[s])}\t{bare[s]}\t{b:.4f}")


if __name__ == "__main__":
    main()
