from src.common.exceptions import MemoryToolkitError


class ExperimentError(MemoryToolkitError):
    pass


class MissingInputError(ExperimentError):
    """Trained weights or the layout they belong to do not match the dataset."""
