"""Common utilities: configuration loading, counter-based random streams, chunked parallel maps
and moment accumulators."""
