class Maker {
    void build() {
        Widget w = new Widget();
        Gadget g = new Gadget(1, "two");
    }
}
