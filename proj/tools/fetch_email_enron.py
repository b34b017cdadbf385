#!/usr/bin/env python3
"""Fetch the public email-Enron hypergraph (and optionally contact-high-school)
and convert it to the one-hyperedge-per-line format the tools read.

The source is the simplicial dataset collection at
https://www.cs.cornell.edu/~arb/data/ : each dataset ships as a zip with
<name>-nverts.txt (size of each simplex) and <name>-simplices.txt (the
flattened node list). Duplicate hyperedges are kept here; the loader drops
them and reports how many it removed.

Usage:
    python3 tools/fetch_email_enron.py [--out-dir data] [--contact-high]
"""

import argparse
import io
import sys
import urllib.request
import zipfile

BASE = "https://www.cs.cornell.edu/~arb/data"

DATASETS = {
    "email-Enron": ("email-Enron", "email-enron.txt"),
    "contact-high-school": ("contact-high-school", "contact-high.txt"),
}


def fetch(name: str, out_path: str) -> None:
    url = f"{BASE}/{name}/{name}.zip"
    print(f"downloading {url} ...")
    with urllib.request.urlopen(url, timeout=120) as resp:
        payload = resp.read()
    archive = zipfile.ZipFile(io.BytesIO(payload))

    def read_ints(suffix: str) -> list[int]:
        for entry in archive.namelist():
            if entry.endswith(f"{name}-{suffix}.txt"):
                return [int(tok) for tok in archive.read(entry).split()]
        raise FileNotFoundError(f"{name}-{suffix}.txt not in {url}")

    nverts = read_ints("nverts")
    simplices = read_ints("simplices")
    if sum(nverts) != len(simplices):
        raise ValueError("corrupt download: simplex sizes do not sum to node count")

    with open(out_path, "w") as out:
        pos = 0
        for size in nverts:
            out.write(" ".join(str(v) for v in simplices[pos : pos + size]) + "\n")
            pos += size
    print(f"wrote {len(nverts)} hyperedge lines to {out_path}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="data")
    parser.add_argument("--contact-high", action="store_true",
                        help="also fetch contact-high-school (stretch target)")
    args = parser.parse_args()

    targets = ["email-Enron"] + (["contact-high-school"] if args.contact_high else [])
    for key in targets:
        name, filename = DATASETS[key]
        try:
            fetch(name, f"{args.out_dir}/{filename}")
        except Exception as exc:  # noqa: BLE001 - report and keep going
            print(f"failed to fetch {name}: {exc}", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
