#!/usr/bin/env python3
"""Writes the expected CSVs for `gho sweep --ue-counts 1:100 --protocols lte,group --seed 7`.

Values come from the closed-form latency and packet model, independently of
the C++ implementation. Re-run only when the model or the CSV layout changes.
"""
import hashlib
import pathlib

PS_PER_S = 10**12
BASE_PS = 50_000_000_000      # 0.05 s
COMPLETION_PS = 10_000_000    # 10 us, once per batch
BS_BS_PACKET_PS = 7_500       # 7.5 ns

CANONICAL = "".join(f"{k}={v}\n" for k, v in [
    ("command", "sweep"), ("corrupt", ""), ("group", "toy"), ("per_ue_kbps", "1100"),
    ("protocol", "group"), ("protocols", "lte,group"), ("seed", "7"),
    ("terrestrial_kbps", "100000"), ("threshold", "3"), ("trials", "100"),
    ("ue_count", "10"), ("ue_counts", "1:100"), ("uxnb_kbps", "160000"),
])

HEADER = "".join(f"# {k}={v}\n" for k, v in [
    ("tool", "gho 0.1.0"), ("command", "sweep"), ("seed", "7"), ("group_size", "toy"),
    ("threshold", "3"), ("config_digest", hashlib.sha256(CANONICAL.encode()).hexdigest()),
    ("overrides", "none"),
])


def seconds(ps):
    return f"{ps // PS_PER_S}.{ps % PS_PER_S:012d}"


def lte(n):
    time = BASE_PS + COMPLETION_PS + 2 * n * BS_BS_PACKET_PS
    packets = {"UE_BS": 5 * n, "BS_BS": 3 * n, "BS_CORE": 4 * n, "UE_CORE": 6 * n, "BS_BS_HANDOVER": 2 * n}
    return time, packets


def group(n):
    packets = {"UE_BS": 3 * n, "BS_BS": 2, "BS_CORE": 4 * n, "UE_CORE": 6 * n, "BS_BS_HANDOVER": 0}
    return BASE_PS, packets


def main():
    here = pathlib.Path(__file__).parent
    times, counts = [HEADER + "protocol,ue_count,seconds\n"], [HEADER + "protocol,ue_count,link_class,count\n"]
    for name, model in (("lte", lte), ("group", group)):
        for n in range(1, 101):
            t, p = model(n)
            times.append(f"{name},{n},{seconds(t)}\n")
            counts.extend(f"{name},{n},{k},{v}\n" for k, v in p.items())
    (here / "sweep_handover_time.csv").write_text("".join(times))
    (here / "sweep_packet_counts.csv").write_text("".join(counts))


if __name__ == "__main__":
    main()
