"""Exhaustive-search engine for worst-case optimal Shellsort gap sequences."""

ENGINE_VERSION = "1.0.0"
