class Prec {
    int mix(int a, int b, int c) {
        int r1 = a + b * c;
        int r2 = (a + b) * c;
        int r3 = a - b - c;
        int r4 = a - (b - c);
        int r5 = a << 2 | b & c ^ 3;
        boolean r6 = a < b == c > a;
        return r1 + r2 + r3 + r4 + r5;
    }
}
