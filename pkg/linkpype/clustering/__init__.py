"""Clustering of pages by dwell time and clicks.

Pages are points ``(S, C)``: average dwell seconds and visit count. The primary
algorithm is farthest-first traversal, the greedy 2-approximation for the
k-center problem, seeded at the point farthest from the mean. A Lloyd k-means
baseline exists for runtime and agreement comparisons, and interquartile-range
fences flag outlying feature values before clustering.

All distance computations go through ``DistanceCounter`` so that both algorithms
report exactly how many point-to-point distances they evaluated.

Key Components:
    FeaturePoint: One page's feature vector.
    ClusterModel: Centers, labels and instrumentation of a clustering run.
    distance: Euclid or Manhattan distance between two points.
    farthest_first: Deterministic farthest-first traversal clustering.
    kmeans_baseline: Seeded Lloyd iteration.
    iqr_outliers: Tukey-fence outlier flags.
"""
