import sys

from pydantic import BaseModel

from njordan.services.persistence import save_report, to_json

"""
This file is used to send a command's result to the terminal and, with --json, to a file
--json - prints the JSON to stdout instead of the text table
"""


def emit(model: BaseModel, text: str, json_path: str | None):
    if json_path == "-":
        sys.stdout.write(to_json(model) + "\n")
        return
    sys.stdout.write(text + "\n")
    if json_path:
        save_report(model, json_path)
