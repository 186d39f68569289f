# Corpus, reports and the verifier suite
