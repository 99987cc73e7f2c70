# src/__init__.py
# Batch scheduling simulator packages
