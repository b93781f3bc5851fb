"""Test suite for the LinkPype package.

Tests are grouped by package, with shared fixtures in conftest.py:

    - test_ingest/: Log parsing and the synthetic log generator
    - test_sitegraph/: Site graph model and graph files
    - test_preprocess/: Cleaning, sessionization, path completion, formatting
    - test_clustering/: Farthest-first, k-means and IQR outliers
    - test_mining/: Apriori and candidate-link extraction
    - test_reorganizer/: Link matching and plan building
    - test_pipeline/: Configuration, reports and the stage manager
    - test_bench.py, test_cli.py: Benchmark and command line

Running Tests:
    ```bash
    pytest
    pytest tests/test_mining/
    pytest --cov=linkpype --cov-report=html
    ```
"""
