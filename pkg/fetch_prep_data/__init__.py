# Reading and validating JSON input files
