class Unary {
    int ops(int x, boolean b) {
        int neg = -x;
        int pos = +x;
        int flip = ~x;
        boolean not = !b;
        return neg + pos + flip;
    }
}
