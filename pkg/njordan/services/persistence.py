import logging
from pathlib import Path

from pydantic import BaseModel, ValidationError

from njordan.errors import CertificateFormatError
from njordan.schema.certificate import Certificate

"""
This file is used to save reports and certificates as JSON files and to load certificates back
"""

logger = logging.getLogger(__name__)


## Saving

def to_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2, exclude_none=True)


def save_report(model: BaseModel, path: str | Path) -> Path:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json(model) + "\n", encoding="utf-8")
    logger.info("wrote %s", path)
    return path


def save_certificate(cert: Certificate, path: str | Path) -> Path:
    return save_report(cert, path)


## Loading

def load_certificate(path: str | Path) -> Certificate:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CertificateFormatError(f"Cannot read {path}: {exc.strerror}") from None
    try:
        return Certificate.model_validate_json(text)
    except ValidationError as exc:
        error = exc.errors()[0]
        if error["type"] == "json_invalid":
            raise CertificateFormatError(f"{path} is not valid JSON: {error['msg']}") from None
        raise CertificateFormatError(f"{path} is not a certificate: {error['msg']}") from None
