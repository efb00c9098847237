"""Lexicon index reports: delimited bucket tables and histogram figures.

Bucket-size distribution is what makes code-keyed lookup fast, so the
report path emits it both machine-readably (TSV) and as figures.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .lexicon import Lexicon, bucket_sizes, stats
from .tables import KIND_SHAPE, KIND_SOUND


def stats_lines(lex: Lexicon) -> list[str]:
    """Tab-separated summary rows: metric, value."""
    st = stats(lex)
    lines = [
        f"word_count\t{st.word_count}",
        f"duplicates_merged\t{st.duplicates_merged}",
    ]
    for kind, s in ((KIND_SOUND, st.sound), (KIND_SHAPE, st.shape)):
        lines.append(f"{kind}_bucket_count\t{s.bucket_count}")
        lines.append(f"{kind}_max_bucket\t{s.max_bucket}")
        lines.append(f"{kind}_mean_bucket\t{s.mean_bucket:.4f}")
    return lines


def write_reports(lex: Lexicon, out_dir: str) -> list[str]:
    """Write bucket_sizes.tsv and one histogram PNG per index into
    ``out_dir``; returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    written = []

    tsv_path = os.path.join(out_dir, "bucket_sizes.tsv")
    with open(tsv_path, "w", encoding="utf-8") as fh:
        fh.write("kind\tcode\tsize\n")
        for kind in (KIND_SOUND, KIND_SHAPE):
            for code, size in sorted(bucket_sizes(lex, kind).items()):
                fh.write(f"{kind}\t{code}\t{size}\n")
    written.append(tsv_path)

    for kind in (KIND_SOUND, KIND_SHAPE):
        sizes = list(bucket_sizes(lex, kind).values())
        fig, ax = plt.subplots(figsize=(6, 4))
        if sizes:
            ax.hist(sizes, bins=range(1, max(sizes) + 2), align="left", rwidth=0.85)
        ax.set_xlabel("bucket size (words per code)")
        ax.set_ylabel("buckets")
        ax.set_title(f"{kind} index: {len(sizes)} buckets, {len(lex)} words")
        fig.tight_layout()
        png_path = os.path.join(out_dir, f"{kind}_bucket_sizes.png")
        fig.savefig(png_path, dpi=120)
        plt.close(fig)
        written.append(png_path)
    return written
