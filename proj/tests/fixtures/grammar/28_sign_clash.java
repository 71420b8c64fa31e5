class Signs {
    int tricky(int a, int b) {
        int r1 = a - -b;
        int r2 = -(-a);
        int r3 = a + -b;
        return r1 + r2 + r3;
    }
}
