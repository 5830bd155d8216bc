import json
import string
import unicodedata
from enum import Enum
from multiprocessing.pool import Pool
from typing import Callable, Iterable, List, Sequence

import numpy as np
import pandas as pd
from sympy import Integer, Rational
from tqdm import tqdm


class JsonEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, Integer):
            return int(obj)
        elif isinstance(obj, Rational):
            return str(obj)
        elif isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, Enum):
            return obj.name.lower()
        else:
            return super(JsonEncoder, self).default(obj)


def dumps(obj) -> str:
    return json.dumps(obj, cls=JsonEncoder, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_table(rows: Iterable[dict], columns: Sequence[str]) -> str:
    df = pd.DataFrame(list(rows), columns=list(columns))
    if df.empty:
        return "(empty)"
    return df.to_string(index=False)


def parallel_map(fn: Callable, items: Sequence, processes: int = 1, progress: bool = False) -> List:
    """``list(map(fn, items))`` in a worker pool when ``processes > 1``, in input order."""
    if processes > 1:
        with Pool(processes) as p:
            return list(tqdm(p.imap(fn, items), total=len(items), disable=not progress))
    return list(tqdm(map(fn, items), total=len(items), disable=not progress))


valid_filename_chars = "-_.()+%s%s" % (string.ascii_letters, string.digits)


def clean_filename(filename: str, whitelist: str = valid_filename_chars, replace: str = " /") -> str:
    for r in replace:
        filename = filename.replace(r, "_")
    cleaned_filename = unicodedata.normalize("NFKD", filename).encode("ASCII", "ignore").decode()
    return "".join(c for c in cleaned_filename if c in whitelist) or "custom"
