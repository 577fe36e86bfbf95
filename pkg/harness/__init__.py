# Harness package

