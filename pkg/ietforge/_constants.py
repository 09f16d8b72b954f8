# SPDX-FileCopyrightText: (c) 2021-2023 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

import sys

__version__ = "0.1.0"
__copyright__ = "2021-2023 Artёm iG <github.com/rtmigo>"

__build_timestamp__ = "2023-11-02 18:05:41"

# replacing unicode chars with ASCII for non-unicode interpreters
# (such as Windows PowerShell)
try:
    __copyright__.encode(sys.stdout.encoding)
except (UnicodeEncodeError, TypeError):
    __copyright__ = __copyright__.replace("ё", "e")
