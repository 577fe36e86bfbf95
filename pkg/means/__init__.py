# Means package

