import argparse

from src.services.analysis_services.controller.analysis_controller import register as register_analysis
from src.services.experiment_services.controller.experiment_controller import register as register_experiments
from src.services.image_services.controller.image_controller import register as register_images
from src.services.learning_services.controller.learning_controller import register as register_learning
from src.services.memory_model.controller.layout_controller import register as register_layout
from src.services.recall_services.controller.recall_controller import register as register_recall
from src.services.synth_services.controller.synth_controller import register as register_synth

# Sub-command registrations, in the order they appear in --help
command_registrations = [
    register_synth,
    register_layout,
    register_learning,
    register_recall,
    register_experiments,
    register_analysis,
    register_images,
]


def init_commands(subparsers: argparse._SubParsersAction) -> None:
    """Add every sub-command to the CLI parser."""
    for register in command_registrations:
        register(subparsers)
