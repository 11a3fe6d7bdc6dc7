# no characters, so no label universe
