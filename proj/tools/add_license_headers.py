#!/usr/bin/env python3
"""Prepend the Apache-2.0 box header to C/C++ sources that lack it."""

import pathlib
import sys

WIDTH = 80
LINES = [
    "",
    "This file is part of rotflow",
    "",
    "Copyright 2026 rotflow developers",
    "",
    'Licensed under the Apache License, Version 2.0 (the "License");',
    "you may not use this file except in compliance with the License.",
    "You may obtain a copy of the License at",
    "",
    "    http://www.apache.org/licenses/LICENSE-2.0",
    "",
    "Unless required by applicable law or agreed to in writing, software",
    'distributed under the License is distributed on an "AS IS" BASIS,',
    "WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.",
    "See the License for the specific language governing permissions and",
    "limitations under the License.",
    "",
]


def header(c_style: bool) -> str:
    if c_style:
        bar = "/" + "*" * (WIDTH - 2) + "/"
        body = ["/*  " + s.ljust(WIDTH - 8) + "  */" for s in LINES]
    else:
        bar = "/" * WIDTH
        body = ["//  " + s.ljust(WIDTH - 8) + "  //" for s in LINES]
    return "\n".join([bar, *body, bar]) + "\n\n"


def main() -> int:
    root = pathlib.Path(__file__).resolve().parent.parent
    changed = 0
    for sub in ("src", "include", "tests", "tools"):
        for p in sorted((root / sub).rglob("*")):
            if p.suffix not in (".cpp", ".hpp", ".h"):
                continue
            text = p.read_text()
            if "Licensed under the Apache License" in text[:2000]:
                continue
            # Public C header stays valid C89 comment style.
            p.write_text(header(p.suffix == ".h") + text)
            changed += 1
    print(f"headers added to {changed} files")
    return 0


if __name__ == "__main__":
    sys.exit(main())
