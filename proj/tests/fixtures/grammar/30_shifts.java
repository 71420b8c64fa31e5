class Shifts {
    int shift(int x) {
        int a = x << 1;
        int b = x >> 2;
        int c = x >>> 3;
        int d = x % 5;
        return a + b + c + d;
    }
}
