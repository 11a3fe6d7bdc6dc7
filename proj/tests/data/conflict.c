a,b|c,d
a,c|b,d
