package acme.widgets;

import acme.log.Logger;

public class Mixed {
    public int scale(int base) {
        int factor = Config.lookup("scale");
        if (base > 10) {
            Logger.log(base);
            base = base * factor;
        }
        return base;
    }
}
