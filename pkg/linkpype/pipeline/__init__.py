"""Stage pipeline for LinkPype.

A pipeline run is a chain of stages executed in order by a manager. Each stage
reads what it needs from a shared state object, stores its results on it and
may persist them as report files, so a chain can be cut after any stage and
resumed later from the files it left behind.

Key Components:
    PipelineState: Inputs, intermediate results and the run summary.
    PipelineStage: Abstract base of every step.
    PipelineManager: Runs a chain of stages and maps failures to exit codes.
    run_pipeline: The full chain from log file to reorganization plan.
"""
