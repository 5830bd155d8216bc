import os
from enum import Enum, auto


class LabelMode(Enum):
    PAPER = auto()
    CANONICAL = auto()


class OutputFormat(Enum):
    TEXT = auto()
    JSON = auto()


class ModuleType(Enum):
    TYPE1 = auto()
    TYPE2 = auto()
    TWISTED = auto()

    @property
    def tag(self) -> str:
        return {
            self.TYPE1.name: "type1",
            self.TYPE2.name: "type2",
            self.TWISTED.name: "twisted",
        }[self.name]


DEFAULT_PROCESSES = int(os.environ["ORBIFOLD_FUSION_PROCESSES"]) if "ORBIFOLD_FUSION_PROCESSES" in os.environ else 1


class RunConfig(object):
    def __init__(
        self,
        label_mode: LabelMode = LabelMode.PAPER,
        output_format: OutputFormat = OutputFormat.TEXT,
        processes: int = DEFAULT_PROCESSES,
        progress: bool = False,
        sampled_triples: int = 100,
        seed: int = 42,
    ) -> None:
        self.label_mode = label_mode
        self.output_format = output_format
        self.processes = processes
        self.progress = progress
        self.sampled_triples = sampled_triples
        self.seed = seed
