# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT
import os
from pathlib import Path
from typing import Optional


class WritingToTempFile:
    """We write the output to a temporary file first, and when it's
    complete, we rename the file. An interrupted run never leaves a
    truncated report or picture behind."""

    def __init__(self, file: Path):
        self.final = file
        self.dirty: Optional[Path] = file.parent / (file.name + ".tmp")

    def __enter__(self):
        return self

    def commit(self):
        assert self.dirty is not None
        os.replace(self.dirty, self.final)
        self.dirty = None

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.dirty is not None and self.dirty.exists():
            try:
                os.remove(self.dirty)
            except FileNotFoundError:
                pass


def write_text_atomic(file: Path, text: str) -> None:
    with WritingToTempFile(file) as wtf:
        wtf.dirty.write_text(text, encoding="utf-8")
        wtf.commit()
