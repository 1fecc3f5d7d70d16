import json
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any


class PowerGraphJSONEncoder(json.JSONEncoder):
    def default(self, obj: Any) -> Any:
        if isinstance(obj, Fraction):
            return str(obj)

        if isinstance(obj, (set, frozenset)):
            return sorted(obj)

        if hasattr(obj, "model_dump"):
            try:
                return obj.model_dump(mode="json")
            except Exception:
                pass

        if is_dataclass(obj) and not isinstance(obj, type):
            return asdict(obj)

        if isinstance(obj, range):
            return list(obj)

        return str(obj)


def to_json(content: Any) -> str:
    return json.dumps(content, ensure_ascii=False, indent=2, cls=PowerGraphJSONEncoder)


def write_json(file_path: str | Path, content: Any) -> Path:
    path = Path(file_path)
    try:
        text = to_json(content)
    except (TypeError, ValueError):
        text = json.dumps({"error": "Failed to serialize", "content": str(content)}, ensure_ascii=False, indent=2)
    path.write_text(text + "\n", encoding="utf-8")
    return path
