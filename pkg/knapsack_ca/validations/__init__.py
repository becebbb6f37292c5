# Validation modules
