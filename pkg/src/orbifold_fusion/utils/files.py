import os

from orbifold_fusion.data.documents import InputDocument, ReportDocument
from orbifold_fusion.exceptions import BadParameter
from orbifold_fusion.utils.utils import clean_filename

OUTPUT_PATH = os.environ["OUTPUT_PATH"] if "OUTPUT_PATH" in os.environ else "output"


def get_report_path(setting_name: str, command: str) -> str:
    return os.path.join(OUTPUT_PATH, "reports", clean_filename(setting_name), "%s.json" % command)


def read_input_document(path: str) -> InputDocument:
    try:
        with open(path, "r", encoding="utf-8") as input_file:
            return InputDocument.from_json(input_file.read())
    except OSError as e:
        raise BadParameter("cannot read input file %s: %s" % (path, e.strerror))


def save_report(report: ReportDocument, setting_name: str, command: str) -> str:
    path = get_report_path(setting_name, command)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as report_file:
        report_file.write(report.to_json())
    return path
