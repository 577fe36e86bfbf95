# Handlers package

