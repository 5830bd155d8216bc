"""Input and report documents.

An input document is a JSON object with keys ``gram``, ``sigma`` and an optional
``name``. Reports are written with sorted keys and fixed indentation, so serializing
the same report twice gives the same bytes.
"""
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from orbifold_fusion.exceptions import BadParameter
from orbifold_fusion.lattice.setting import OrbifoldSetting, validate_setting
from orbifold_fusion.utils.utils import dumps


@dataclass
class InputDocument(object):
    gram: List[List[int]]
    sigma: List[List[int]]
    name: Optional[str] = None

    def setting(self) -> OrbifoldSetting:
        return validate_setting(self.gram, self.sigma, self.name)

    def to_json(self) -> str:
        return dumps({"gram": self.gram, "sigma": self.sigma, "name": self.name})

    @classmethod
    def from_json(cls, text: str) -> "InputDocument":
        try:
            data = json.loads(text)
        except ValueError as e:
            raise BadParameter("input document is not valid JSON: %s" % e)
        if not isinstance(data, dict) or "gram" not in data or "sigma" not in data:
            raise BadParameter("input document needs the keys 'gram' and 'sigma'")
        unknown = set(data) - {"gram", "sigma", "name"}
        if unknown:
            raise BadParameter("unknown keys in input document: %s" % sorted(unknown))
        for key in ("gram", "sigma"):
            matrix = data[key]
            if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
                raise BadParameter("'%s' must be an array of arrays" % key)
        return cls(data["gram"], data["sigma"], data.get("name"))


@dataclass
class ReportDocument(object):
    """Machine-readable summary of one run. Sections not computed by a command are None."""

    setting: Dict[str, Any]
    mode: str
    labels: Optional[List[Dict[str, Any]]] = None
    counts: Optional[Dict[str, int]] = None
    qdims: Optional[List[Dict[str, Any]]] = None
    fusion: Optional[List[Dict[str, Any]]] = field(default=None)
    verification: Optional[Dict[str, Dict[str, Any]]] = None

    def to_json(self) -> str:
        return dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        data = json.loads(text)
        return cls(**data)
