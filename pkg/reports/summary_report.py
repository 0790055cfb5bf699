analyze_summary_template = """
Basis:            {basis}
Margin:           {margin:.6g} ({admissibility})
Terms:            {terms} ({nonzero} nonzero)
Converged:        {converged} (eps = {eps:g})
Initial residual: {initial:.6g}
Final residual:   {final:.6g}
Monotone trace:   {monotone}
"""

roundtrip_summary_template = """
Residual trace:   {trace}
Final residual:   {final_residual:.6g}
Render RMS error: {rms:.6g} ({relative:.3%} of signal norm {signal_norm:.6g})
Compared:         {compared}
"""

compare_haar_template = """
Signal:               {signal}, L = {length}
Square waves ({square_n:>4}): RMS {square_rms:.6g} (after RC low-pass at {cutoff:g} harmonics, {oversample}x oversampling)
Haar functions ({haar_n:>4}): RMS {haar_rms:.6g}
Winner:               {winner}
"""


def format_trace(trace, limit: int = 12) -> str:
    values = [f"{value:.4g}" for value in trace]
    if len(values) > limit:
        values = values[:limit // 2] + ["..."] + values[-limit // 2:]
    return "[" + ", ".join(values) + "]"
