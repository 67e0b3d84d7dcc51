#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert command-line entry point** (i.e., submodule run by
``python -m synccert``).
'''

# ....................{ IMPORTS                           }....................
from synccert._cli.climain import main

# ....................{ MAIN                              }....................
if __name__ == '__main__':
    raise SystemExit(main())
