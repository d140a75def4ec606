# k3census/cli/__init__.py
