#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Root test configuration** (i.e., early-time configuration guaranteed to be
run by :mod:`pytest` *before* passed command-line arguments are parsed) for
this test suite.

Caveats
----------
This configuration should contain *only* hooks that :mod:`pytest` requires to
be defined in the ``conftest.py`` file situated at the tests root directory.
'''

# ....................{ IMPORTS                           }....................
import os, sys

# ....................{ HOOKS ~ session                   }....................
def pytest_sessionstart(session: '_pytest.main.Session') -> None:
    '''
    Hook run immediately *before* starting the current test session.
    '''

    _clean_imports()


def pytest_collection_modifyitems(
    config: '_pytest.config.Config', items: list) -> None:
    '''
    Hook skipping all tests marked ``slow`` unless the current mark
    expression (i.e., the ``-m`` option) names that mark.
    '''

    if 'slow' in (config.getoption('markexpr') or ''):
        return
    # Else, slow tests were not requested.

    import pytest
    skip_slow = pytest.mark.skip(reason='Slow test (pass "-m slow" to run).')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)

# ....................{ PRIVATE                           }....................
def _clean_imports() -> None:
    '''
    Isolate imports to the current venv if any.

    If this test session is *not* isolated to a venv (e.g., when run by the
    ``pytest`` command from the source tree), reduce to a noop. Else (e.g.,
    when run by ``tox``), drop the project directory from :attr:`sys.path`,
    move every import directory outside this venv to the end of that list and
    validate that the :mod:`synccert` package is imported from this venv.

    Raises
    ----------
    ValueError
        If either the first directory on :attr:`sys.path` or the
        :mod:`synccert` package is *not* isolated to this venv.
    '''

    is_venv = hasattr(sys, 'real_prefix') or sys.prefix != sys.base_prefix
    print(f'venv test isolation: {is_venv}')
    if not is_venv:
        return
    # Else, this session is isolated to a venv.

    PROJECT_DIRNAME = os.path.dirname(__file__)
    VENV_DIRNAME = sys.prefix + os.path.sep

    def _is_import_path_isolated(import_pathname: str) -> bool:
        '''
        ``True`` only if the passed pathname either lies in this venv *or* is
        a zipfile.
        '''

        return (
            import_pathname.startswith(VENV_DIRNAME) or
            (
                os.path.isfile(import_pathname) and
                import_pathname.endswith('.zip')
            )
        )

    sys_path_isolated = []
    sys_path_nonisolated = []
    for import_pathname in sys.path:
        if not import_pathname or import_pathname == PROJECT_DIRNAME:
            print(
                f'WARNING: Ignoring non-isolated import directory '
                f'"{import_pathname}"...',
                file=sys.stderr)
        elif _is_import_path_isolated(import_pathname):
            sys_path_isolated.append(import_pathname)
        else:
            sys_path_nonisolated.append(import_pathname)

    sys.path = sys_path_isolated + sys_path_nonisolated
    print(f'venv import paths (sanitized): {sys.path}')

    if not _is_import_path_isolated(sys.path[0]):
        raise ValueError(
            f'Leading import path "{sys.path[0]}" not isolated to '
            f'venv directory "{VENV_DIRNAME}".')

    import synccert as package
    PACKAGE_DIRNAME = os.path.dirname(package.__file__)
    print(f'venv project path: {PACKAGE_DIRNAME}')

    if not _is_import_path_isolated(PACKAGE_DIRNAME):
        raise ValueError(
            f'Project import directory "{PACKAGE_DIRNAME}" not isolated to '
            f'venv directory "{VENV_DIRNAME}".')
