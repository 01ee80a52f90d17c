import json
import logging
import sys
from contextlib import nullcontext
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Sequence, TextIO, Union

from pydantic import BaseModel

from app.core.config import base_settings
from app.core.decorators import log_errors

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def build_report(command: str, result: Union[BaseModel, Mapping[str, Any]]) -> Dict[str, Any]:
    payload = result.model_dump(mode="json") if isinstance(result, BaseModel) else dict(result)
    return {"schema_version": base_settings.REPORT_SCHEMA_VERSION, "command": command, **payload}


class ReportRepository:
    """JSON / TSV 결과 리포트. path 가 없으면 stdout 으로 쓴다."""

    def __init__(self, stream: Optional[TextIO] = None):
        self.stream = stream

    def _open(self, path: Optional[PathLike]):
        if path is None:
            # stdout 이나 주입된 스트림은 닫지 않는다
            return nullcontext(self.stream or sys.stdout)
        return open(path, "w", encoding="utf-8")

    @log_errors("Failed to write JSON report")
    def write_json(self, report: Mapping[str, Any], path: Optional[PathLike] = None) -> None:
        with self._open(path) as f:
            json.dump(report, f, indent=2, ensure_ascii=False)
            f.write("\n")
            f.flush()
        if path is not None:
            logger.info(f"report written to {path}")

    @log_errors("Failed to write TSV report")
    def write_tsv(
            self,
            rows: Mapping[str, Sequence[Any]],
            columns: Sequence[str],
            path: Optional[PathLike] = None,
    ) -> None:
        """첫 열은 단어, 나머지는 columns 순서의 값"""
        with self._open(path) as f:
            f.write("\t".join(["word", *columns]) + "\n")
            for word, values in rows.items():
                f.write("\t".join([word, *("" if v is None else repr(float(v)) for v in values)]) + "\n")
            f.flush()


def get_report_repository() -> ReportRepository:
    return ReportRepository()
