# Regression corpus
