#!/usr/bin/env python3
"""Download the benchmark networks listed in datasets/manifest.txt.

Each dataset lands as <dest>/<name>.edges, a plain two-column edge list.
Archives are unpacked and the largest edge-like member is used; rows with
extra columns (weights, timestamps) are truncated to their first two
fields. Networks whose manifest sha256 is '-' are best-effort sources;
see the manifest comments.
"""

import argparse
import gzip
import hashlib
import io
import re
import sys
import tarfile
import urllib.request
import zipfile
from pathlib import Path

MANIFEST = Path(__file__).resolve().parent.parent / "datasets" / "manifest.txt"

# networks whose reference statistics describe the largest component only
EXTRACT_LARGEST_COMPONENT = {"collaboration"}


def read_manifest(path):
    rows = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, url, sha = line.split()
        rows.append((name, url, sha))
    return rows


def download(url):
    sys.stderr.write(f"  fetching {url}\n")
    with urllib.request.urlopen(url, timeout=120) as resp:
        return resp.read()


def looks_like_edges(name):
    return bool(re.search(r"\.(edges|txt|csv|tsv|mtx)$", name, re.IGNORECASE))


def extract_edge_text(blob, url):
    if url.endswith(".gz") and not url.endswith(".tar.gz"):
        return gzip.decompress(blob).decode("utf-8", "replace")
    if url.endswith(".zip"):
        with zipfile.ZipFile(io.BytesIO(blob)) as zf:
            members = [m for m in zf.namelist() if looks_like_edges(m)]
            if not members:
                members = zf.namelist()
            best = max(members, key=lambda m: zf.getinfo(m).file_size)
            return zf.read(best).decode("utf-8", "replace")
    if url.endswith((".tar.bz2", ".tar.gz", ".tbz2", ".tgz")):
        with tarfile.open(fileobj=io.BytesIO(blob)) as tf:
            members = [m for m in tf.getmembers()
                       if m.isfile() and looks_like_edges(m.name)]
            if not members:
                members = [m for m in tf.getmembers() if m.isfile()]
            best = max(members, key=lambda m: m.size)
            return tf.extractfile(best).read().decode("utf-8", "replace")
    return blob.decode("utf-8", "replace")


def normalize(text):
    """Two-column whitespace edge list; comments dropped, extras truncated."""
    out = []
    for line in text.splitlines():
        line = line.strip().replace(",", " ")
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) < 2:
            continue
        if not (parts[0][0].isalnum() and parts[1][0].isalnum()):
            continue
        out.append(f"{parts[0]} {parts[1]}")
    return "\n".join(out) + "\n"


def largest_component(text):
    from collections import defaultdict, deque
    adj = defaultdict(set)
    for line in text.splitlines():
        u, v = line.split()
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    seen = set()
    best = set()
    for start in adj:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    queue.append(y)
        if len(comp) > len(best):
            best = comp
    rows = []
    done = set()
    for line in text.splitlines():
        u, v = line.split()
        key = (u, v) if u < v else (v, u)
        if u in best and v in best and u != v and key not in done:
            done.add(key)
            rows.append(line)
    return "\n".join(rows) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dest", default="data", help="output directory")
    ap.add_argument("--manifest", default=str(MANIFEST))
    ap.add_argument("--only", nargs="*", help="subset of dataset names")
    args = ap.parse_args()

    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    failures = []
    for name, url, sha in read_manifest(Path(args.manifest)):
        if args.only and name not in args.only:
            continue
        target = dest / f"{name}.edges"
        if target.exists():
            sys.stderr.write(f"{name}: already present, skipping\n")
            continue
        sys.stderr.write(f"{name}:\n")
        try:
            blob = download(url)
        except Exception as exc:  # noqa: BLE001 - report and move on
            failures.append(name)
            sys.stderr.write(f"  FAILED: {exc}\n")
            continue
        if sha != "-":
            digest = hashlib.sha256(blob).hexdigest()
            if digest != sha:
                failures.append(name)
                sys.stderr.write(f"  FAILED: sha256 mismatch ({digest})\n")
                continue
        text = normalize(extract_edge_text(blob, url))
        if name in EXTRACT_LARGEST_COMPONENT:
            text = largest_component(text)
        target.write_text(text, encoding="utf-8")
        sys.stderr.write(f"  wrote {target}\n")
    if failures:
        sys.stderr.write(f"failed: {', '.join(failures)}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
