#!/usr/bin/env python3
# --------------------( LICENSE                           )--------------------
# Copyright (c) 2020-2021 synccert contributors.
# See "LICENSE" for further details.

'''
**Synccert output documents.**

This private submodule serializes command results into versioned JSON
documents of the form
``{"schema": "v1", "command": ..., "config": {...}, "result": {...}}`` and
projects them onto flat CSV tables.

JSON is canonical and lossless. Infinite condition sides are written as the
JavaScript literals ``Infinity`` and ``-Infinity`` understood by
:func:`json.loads`; undefined sides are ``null``. CSV keeps only the main
table of each command (e.g., the condition trace of ``certify``) and drops
nested lists.

This private submodule is *not* intended for importation by downstream callers.
'''

# ....................{ IMPORTS                           }....................
import csv
import io
import json
import numpy as np
from dataclasses import fields, is_dataclass
from enum import Enum
from synccert.roar import SyncCertCliInputException
from typing import Any, Dict, List, Optional

# See the "synccert.__init__" submodule for further commentary.
__all__ = ['STAR_IMPORTS_CONSIDERED_HARMFUL']

# ....................{ CONSTANTS                         }....................
SCHEMA_VERSION = 'v1'
'''
Schema version embedded in and required of every document.
'''


CSV_TABLE_KEYS = {
    'certify': 'conditions',
    'threshold': 'probes',
    'simulate': 'trials',
    'spectral': 'samples',
    'reproduce-table': 'rows',
}
'''
Dictionary mapping each command name to the key of the list of rows in its
result projected onto CSV.
'''

# ....................{ CONVERTERS                        }....................
def to_jsonable(obj: Any) -> Any:
    '''
    JSON-serializable equivalent of the passed object.

    Dataclasses become dictionaries of their fields, enumeration members
    their values, :mod:`numpy` arrays and tuples lists and :mod:`numpy`
    scalars Python scalars.
    '''

    if obj is None or isinstance(obj, (bool, str)):
        return obj
    elif isinstance(obj, Enum):
        return obj.value
    elif isinstance(obj, (int, np.integer)):
        return int(obj)
    elif isinstance(obj, (float, np.floating)):
        return float(obj)
    elif isinstance(obj, complex):
        return {'re': obj.real, 'im': obj.imag}
    elif isinstance(obj, np.ndarray):
        return [to_jsonable(item) for item in obj.tolist()]
    elif is_dataclass(obj) and not isinstance(obj, type):
        return {
            field.name: to_jsonable(getattr(obj, field.name))
            for field in fields(obj)
        }
    elif isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [to_jsonable(item) for item in obj]

    raise TypeError(f'{repr(obj)} not JSON-serializable.')

# ....................{ DOCUMENTS                         }....................
def make_document(command: str, config: dict, result: Any) -> dict:
    '''
    Versioned document wrapping the passed command result.
    '''

    return {
        'schema': SCHEMA_VERSION,
        'command': command,
        'config': to_jsonable(config),
        'result': to_jsonable(result),
    }


def dump_document(document: dict, output_format: str = 'json') -> str:
    '''
    Passed document formatted as either JSON or CSV text.
    '''
    assert output_format in ('json', 'csv'), (
        f'Format "{output_format}" unknown.')

    if output_format == 'json':
        return json.dumps(document, indent=2) + '\n'
    # Else, project onto CSV.

    rows = _get_csv_rows(document)
    header: List[str] = []
    for row in rows:
        for key in row:
            if key not in header:
                header.append(key)

    text = io.StringIO()
    writer = csv.DictWriter(text, fieldnames=header, lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return text.getvalue()


def read_document(text: str) -> dict:
    '''
    Document parsed from the passed JSON text.

    Raises
    ----------
    SyncCertCliInputException
        If this text is not a JSON object of schema :data:`SCHEMA_VERSION`.
    '''

    try:
        document = json.loads(text)
    except ValueError as exception:
        raise SyncCertCliInputException(
            f'Document not JSON: {exception}') from exception

    if not isinstance(document, dict):
        raise SyncCertCliInputException('Document not a JSON object.')

    schema = document.get('schema')
    if schema != SCHEMA_VERSION:
        raise SyncCertCliInputException(
            f'Document schema "{schema}" not "{SCHEMA_VERSION}".')

    for key in ('command', 'config', 'result'):
        if key not in document:
            raise SyncCertCliInputException(f'Document lacks "{key}".')

    return document


def write_text(text: str, path: Optional[str], stream: Any) -> None:
    '''
    Write the passed text to the file with the passed path *or* the passed
    stream if that path is ``None``.
    '''

    if path is None:
        stream.write(text)
        stream.flush()
    else:
        with open(path, 'w', encoding='utf-8', newline='') as file:
            file.write(text)

# ....................{ PRIVATE ~ getters                 }....................
def _get_csv_rows(document: dict) -> List[Dict[str, Any]]:
    '''
    Flat rows of the main table of the passed document.
    '''

    result = document['result']
    table = result.get(CSV_TABLE_KEYS.get(document['command'], ''))
    if table is None:
        table = [result]

    return [_flatten(row) for row in table]


def _flatten(row: dict, prefix: str = '') -> Dict[str, Any]:
    '''
    Passed row with nested dictionaries flattened into dotted keys and
    nested lists dropped.
    '''

    flat: Dict[str, Any] = {}
    for key, value in row.items():
        if isinstance(value, dict):
            flat.update(_flatten(value, f'{prefix}{key}.'))
        elif not isinstance(value, list):
            flat[f'{prefix}{key}'] = value
    return flat
