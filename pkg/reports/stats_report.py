import pandas as pd

formats = {
    "naive": """
Engine:      naive (one add per square per sample, sign by negation)
Samples:     {samples_rendered}
Adds:        {adds} ({adds_per_sample:.3f} per sample)
Multiplies:  {multiplies}
WAV scale:   {scale}
""",

    "diff": """
Engine:      diff (output updated only when a square switches)
Samples:     {samples_rendered}
Adds:        {adds} ({adds_per_sample:.3f} per sample)
Sign flips:  {sign_flips}
Multiplies:  {multiplies}
WAV scale:   {scale}
""",

    "fourier": """
Engine:      fourier (cosine look-up table per partial)
Samples:     {samples_rendered}
Adds:        {adds} ({adds_per_sample:.3f} per sample)
Multiplies:  {multiplies}
Table reads: {table_reads}
WAV scale:   {scale}
""",
}


def stats_report(engine: str, stats, scale=None) -> str:
    scale_text = "n/a" if scale is None else f"{scale:.6g}"
    return formats[engine].format(scale=scale_text, **stats.as_dict()).strip()


def stats_table(stats_by_engine) -> pd.DataFrame:
    """One row of operation counts per engine."""
    rows = [{"engine": name, **stats.as_dict()} for name, stats in stats_by_engine.items()]
    return pd.DataFrame(rows).set_index("engine")
