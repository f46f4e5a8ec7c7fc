# Parsers for key = value run configuration files
