class Caller {
    int twice(int x) {
        return once(x) + once(x);
    }

    int once(int x) {
        return x + 1;
    }

    void drive() {
        Caller c = new Caller();
        int r = c.twice(3);
    }
}
